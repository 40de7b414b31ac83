#include "isoperim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isoperim/counterex.hpp"
#include "isoperim/errors.hpp"
#include "isoperim/functional.hpp"
#include "isoperim/geometry.hpp"
#include "isoperim/orthant.hpp"
#include "isoperim/quad.hpp"
#include "isoperim/rearrange.hpp"
#include "isoperim/regions.hpp"
#include "isoperim/spectral.hpp"

namespace isoperim::verify {

using detail::require;

namespace {

constexpr double pi = 3.14159265358979323846;

// Deterministic xorshift generator: the suites must produce identical draws
// on every platform, which rules out the unspecified standard distributions.
struct Rng {
    unsigned long long state;

    explicit Rng(unsigned long long seed) : state(seed ? seed : 0x9e3779b9ull) {}

    unsigned long long next()
    {
        unsigned long long x = state;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        state = x;
        return x;
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int pick(int n) { return static_cast<int>(next() % static_cast<unsigned long long>(n)); }
};

double smoothstep(double x)
{
    x = std::clamp(x, 0.0, 1.0);
    return x * x * (3.0 - 2.0 * x);
}

// Relative deviation in the style of an approximate-equality check:
// |a - b| / (1 + max(|a|, |b|)).
double rel_dev(double a, double b)
{
    return std::fabs(a - b) / (1.0 + std::max(std::fabs(a), std::fabs(b)));
}

// --- shared random objects -------------------------------------------------

geometry::StarSet random_star_set(Rng& rng, int dim, double alpha, int nodes)
{
    const double base = rng.uniform(0.5, 2.0);
    const double c1 = rng.uniform(-0.25, 0.25) * base;
    const double c2 = rng.uniform(-0.15, 0.15) * base;
    const double c3 = rng.uniform(-0.1, 0.1) * base;
    return geometry::make_star_set(dim, alpha, nodes, [=](double th) {
        return base + c1 * std::sin(th) + c2 * std::cos(2.0 * th) +
               c3 * std::sin(3.0 * th);
    });
}

// Smooth compactly supported bumps on the polar grid; the cutoff keeps the
// support away from the outer edge so gradient integrals see the whole
// boundary.
rearrange::GriddedFunction random_bumps(Rng& rng, int dim, double alpha, int nr,
                                        int nt, double r_max)
{
    struct Bump {
        double a, r0, th0, sr, st;
    };
    const double lo = dim == 2 ? -pi / 2.0 : 0.0;
    Bump bumps[3];
    for (auto& b : bumps) {
        b.a = rng.uniform(0.2, 1.0);
        b.r0 = rng.uniform(0.15 * r_max, 0.8 * r_max);
        b.th0 = rng.uniform(lo + 0.2, pi / 2.0 - 0.2);
        b.sr = rng.uniform(0.1, 0.35) * r_max;
        b.st = rng.uniform(0.25, 0.8);
    }
    return rearrange::make_gridded(
        dim, alpha, nr, nt, r_max, [bumps, r_max](double r, double th) {
            double v = 0.0;
            for (const auto& b : bumps) {
                const double dr = (r - b.r0) / b.sr;
                const double dt = (th - b.th0) / b.st;
                v += b.a * std::exp(-dr * dr - dt * dt);
            }
            return v * smoothstep((0.92 * r_max - r) / (0.08 * r_max));
        });
}

// Weight pairs drawn inside the sufficient regions of the classification.
void draw_certified_pair(Rng& rng, int which, int dim, double alpha, double& k,
                         double& l)
{
    const double s = dim + alpha - 1.0;
    const double t = dim + alpha;
    if (which == 0) {
        k = rng.uniform(1.0, 2.5);
        l = k - 1.0 - rng.uniform(0.0, 1.0);
    } else if (which == 1) {
        k = -rng.uniform(0.0, 0.3);
        const double hi = k * t / s;
        l = k - 1.0 + rng.uniform(0.0, 1.0) * (hi - (k - 1.0));
    } else {
        k = rng.uniform(0.0, 2.0);
        const double hi = regions::l1_threshold(k, dim, alpha);
        l = k - 1.0 + rng.uniform(0.0, 1.0) * (hi - (k - 1.0));
    }
}

orthant::MonomialWeight random_weight(Rng& rng, int dim)
{
    orthant::MonomialWeight a;
    for (int i = 0; i < dim; ++i)
        a.exponents.push_back(rng.uniform(0.1, 2.5));
    return a;
}

// --- geometry ----------------------------------------------------------------

SuiteResult geometry_suite(const Options& options)
{
    SuiteResult out;
    out.suite = "geometry";

    {
        // Star-set quadrature of half-balls against the closed-form constant.
        double worst = 0.0;
        for (double k : {-0.5, 0.0, 1.0, 2.0})
            for (double l : {-0.5, 0.0, 1.0, 2.0})
                for (int dim : {2, 3})
                    for (double alpha : {0.0, 0.5, 1.0}) {
                        const geometry::WeightParams p{k, l, dim, alpha};
                        const auto ball = geometry::make_halfball(dim, alpha, 64);
                        const double err =
                            std::fabs(geometry::rayleigh_ratio(ball, p) -
                                      geometry::crad(p)) /
                            geometry::crad(p);
                        worst = std::max(worst, err);
                    }
        out.properties.push_back(
            {"half-ball quadrature matches the closed-form constant",
             worst <= 1e-9, 1e-9 - worst});
    }

    {
        // Random star sets dominate the constant in every certified regime.
        Rng rng(options.seed + 11);
        double margin = std::numeric_limits<double>::infinity();
        for (int trial = 0; trial < 48; ++trial) {
            const int dim = (trial % 2) ? 3 : 2;
            const double alpha = std::vector<double>{0.0, 0.5, 1.0}[rng.pick(3)];
            double k = 0.0, l = 0.0;
            draw_certified_pair(rng, (trial / 2) % 3, dim, alpha, k, l);
            const geometry::WeightParams p{k, l, dim, alpha};
            const auto set =
                random_star_set(rng, dim, alpha, dim == 2 ? 256 : 64);
            margin = std::min(margin, geometry::rayleigh_ratio(set, p) -
                                          (geometry::crad(p) - 1e-7));
        }
        out.properties.push_back(
            {"random star sets stay above the constant in certified regimes",
             margin >= 0.0, margin});
    }

    {
        // The Rayleigh ratio is invariant under dilations of the profile.
        Rng rng(options.seed + 12);
        double worst = 0.0;
        for (int trial = 0; trial < 6; ++trial) {
            const int dim = (trial % 2) ? 3 : 2;
            const geometry::WeightParams p{0.5, 0.25, dim, 0.5};
            const auto set = random_star_set(rng, dim, 0.5, 128);
            const double base = geometry::rayleigh_ratio(set, p);
            for (double t : {0.5, 2.0}) {
                auto scaled = set;
                for (double& v : scaled.m)
                    v *= t;
                worst = std::max(
                    worst, std::fabs(geometry::rayleigh_ratio(scaled, p) - base) /
                               base);
            }
        }
        out.properties.push_back(
            {"rayleigh ratio is dilation invariant", worst <= 1e-9,
             1e-9 - worst});
    }

    {
        // Past the breaking threshold a far translated ball certifies that
        // half-balls are not optimal: its rigorous upper bound undercuts crad.
        const geometry::WeightParams p{0.0, 1.0, 2, 0.0};
        const auto enclosure =
            geometry::translated_ball_ratio({5.0, 1.0}, p);
        const double margin = geometry::crad(p) - enclosure.upper;
        out.properties.push_back(
            {"translated balls undercut the half-ball constant when l > l_break",
             margin > 0.0, margin});
    }

    {
        // Half-balls minimize the two-exponent measure comparison.
        Rng rng(options.seed + 13);
        double margin = std::numeric_limits<double>::infinity();
        for (int trial = 0; trial < 8; ++trial) {
            const int dim = (trial % 2) ? 3 : 2;
            const double alpha = (trial % 3) * 0.5;
            const auto ball = geometry::make_halfball(dim, alpha, 128);
            const auto set = random_star_set(rng, dim, alpha, 128);
            margin = std::min(margin, geometry::measure_ratio(set, 1.0, 0.0) -
                                          geometry::measure_ratio(ball, 1.0, 0.0));
        }
        out.properties.push_back(
            {"half-balls minimize the measure comparison among star sets",
             margin >= 0.0, margin});
    }

    return out;
}

// --- rearrange ---------------------------------------------------------------

SuiteResult rearrange_suite(const Options& options)
{
    SuiteResult out;
    out.suite = "rearrange";

    {
        // Symmetrization preserves every super-level measure.
        Rng rng(options.seed + 21);
        double worst = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            const int dim = (trial % 2) ? 3 : 2;
            const geometry::WeightParams p{0.0, 0.5, dim, 0.5};
            const auto u = random_bumps(rng, dim, 0.5, 64, 32, 2.0);
            const auto star = rearrange::schwarz_symmetrize(u, p);
            double peak = 0.0;
            for (const auto& ring : u.values)
                for (double v : ring)
                    peak = std::max(peak, v);
            for (int j = 0; j < 20; ++j) {
                const double t = peak * (j + 0.5) / 20.0;
                worst = std::max(worst,
                                 rel_dev(rearrange::measure_above(u, t, p),
                                         rearrange::measure_above(star, t, p)));
            }
        }
        out.properties.push_back(
            {"symmetrization is equimeasurable at sampled levels",
             worst <= 1e-6, 1e-6 - worst});
    }

    {
        // Symmetrizing a symmetrization changes nothing at all.
        Rng rng(options.seed + 22);
        double worst = 0.0;
        for (int trial = 0; trial < 4; ++trial) {
            const geometry::WeightParams p{0.0, 0.25, 2, 1.0};
            const auto u = random_bumps(rng, 2, 1.0, 48, 24, 2.0);
            const auto once = rearrange::schwarz_symmetrize(u, p);
            const auto twice = rearrange::schwarz_symmetrize(once, p);
            if (once.edges.size() != twice.edges.size() ||
                once.values.size() != twice.values.size()) {
                worst = 1.0;
                continue;
            }
            for (std::size_t i = 0; i < once.edges.size(); ++i)
                worst = std::max(worst,
                                 std::fabs(once.edges[i] - twice.edges[i]));
            for (std::size_t i = 0; i < once.values.size(); ++i)
                worst = std::max(worst,
                                 std::fabs(once.values[i] - twice.values[i]));
        }
        out.properties.push_back(
            {"symmetrization is exactly idempotent", worst == 0.0, -worst});
    }

    {
        // Hardy-Littlewood: pairings only grow under joint symmetrization.
        Rng rng(options.seed + 23);
        double margin = std::numeric_limits<double>::infinity();
        for (int trial = 0; trial < 10; ++trial) {
            const int dim = (trial % 2) ? 3 : 2;
            const geometry::WeightParams p{0.0, 0.5, dim, 0.5};
            const auto u = random_bumps(rng, dim, 0.5, 48, 24, 2.0);
            const auto v = random_bumps(rng, dim, 0.5, 48, 24, 2.0);
            const auto check = rearrange::hardy_littlewood_check(u, v, p);
            const double scale = std::max(1.0, check.rhs);
            margin = std::min(margin,
                              (check.rhs - check.lhs) / scale + 1e-12);
        }
        out.properties.push_back(
            {"hardy-littlewood pairing grows under symmetrization",
             margin >= 0.0, margin});
    }

    {
        // One-dimensional rearrangement: weighted variation never increases.
        Rng rng(options.seed + 24);
        double margin = std::numeric_limits<double>::infinity();
        for (int trial = 0; trial < 10; ++trial) {
            rearrange::Cells1D f;
            double edge = rng.uniform(0.0, 0.3);
            f.edges.push_back(edge);
            const int cells = 6 + rng.pick(10);
            for (int i = 0; i < cells; ++i) {
                edge += rng.uniform(0.05, 0.6);
                f.edges.push_back(edge);
                f.values.push_back(rng.uniform(0.0, 2.0));
            }
            for (double delta : {0.0, 0.7, 1.5}) {
                const auto rep = rearrange::decreasing_rearrange_1d(f, delta);
                const double scale = std::max(1.0, rep.rhs);
                margin = std::min(margin,
                                  (rep.rhs - rep.lhs) / scale + 1e-12);
            }
        }
        out.properties.push_back(
            {"decreasing rearrangement contracts the weighted variation",
             margin >= 0.0, margin});
    }

    {
        // Polya-Szego within the certified regions, up to the reported
        // discretization allowance.
        Rng rng(options.seed + 25);
        double margin = std::numeric_limits<double>::infinity();
        const struct {
            double k, l, p_exp;
        } cases[] = {{1.2, 0.0, 2.0}, {-0.3, -0.8, 2.0}, {0.5, -0.2, 1.0}};
        for (int trial = 0; trial < 6; ++trial) {
            const auto& c = cases[trial % 3];
            const geometry::WeightParams p{c.k, c.l, 2, trial < 3 ? 0.0 : 1.0};
            const auto u = random_bumps(rng, 2, p.alpha, 96, 48, 2.0);
            const auto check = rearrange::polya_szego_check(u, c.p_exp, p);
            const double scale = std::max(1.0, check.lhs);
            margin = std::min(
                margin, (check.lhs + check.tolerance - check.rhs) / scale);
        }
        out.properties.push_back(
            {"polya-szego holds with the discretization allowance",
             margin >= 0.0, margin});
    }

    {
        // Star-shaped rearrangement: per-ray measures survive exactly up to
        // quadrature-level roundoff, and every rearranged ray decreases.
        Rng rng(options.seed + 26);
        double worst = 0.0;
        double monotone = 0.0;
        for (int trial = 0; trial < 4; ++trial) {
            const int dim = (trial % 2) ? 3 : 2;
            const auto v = [&] {
                const double a1 = rng.uniform(0.3, 1.0);
                const double z1 = rng.uniform(0.2, 0.5) * 2.0;
                const double s1 = rng.uniform(0.1, 0.3) * 2.0;
                const double b = rng.uniform(-0.5, 0.5);
                return rearrange::make_ray_function(
                    dim, 0.5, 24, 64, 2.0, [=](double z, double th) {
                        const double g = (z - z1) / s1;
                        return a1 * std::exp(-g * g) * (1.0 + b * std::sin(th));
                    });
            }();
            const auto w = rearrange::starshaped_rearrange(v, dim);
            for (std::size_t ray = 0; ray < w.values.size(); ++ray) {
                for (std::size_t i = 1; i < w.values[ray].size(); ++i)
                    monotone = std::max(monotone, w.values[ray][i] -
                                                      w.values[ray][i - 1]);
                for (int j = 1; j <= 5; ++j) {
                    const double t = 0.15 * j;
                    worst = std::max(
                        worst,
                        rel_dev(rearrange::ray_measure_above(v, ray, t, dim),
                                rearrange::ray_measure_above(w, ray, t, dim)));
                }
            }
        }
        out.properties.push_back(
            {"star-shaped rearrangement preserves per-ray measures",
             worst <= 1e-6 && monotone <= 0.0,
             std::min(1e-6 - worst, -monotone)});
    }

    return out;
}

// --- spectral ----------------------------------------------------------------

SuiteResult spectral_suite(const Options& options)
{
    SuiteResult out;
    out.suite = "spectral";
    const int grid = options.grid > 0 ? options.grid : 2000;

    {
        // The first breaking mode at (k=0, l=1, N=2, alpha=0).
        const auto u = spectral::sample_angular(
            2, 0.0, 128, [](double th) { return std::sin(th); },
            [](double th) { return std::cos(th); });
        const double sv =
            spectral::second_variation(u, {0.0, 1.0, 2, 0.0});
        const double err = std::fabs(sv + pi / 2.0);
        out.properties.push_back(
            {"second variation of the first mode equals -pi/2", err <= 1e-9,
             1e-9 - err});
    }

    {
        double worst = 0.0;
        for (double alpha : {-0.9, -0.5, 0.0, 1.0, 2.0})
            worst = std::max(
                worst, std::fabs(spectral::wirtinger_min_eig(alpha, grid)
                                     .min_eigenvalue -
                                 (1.0 + alpha)));
        out.properties.push_back(
            {"wirtinger minimum eigenvalue equals 1+alpha", worst <= 1e-3,
             1e-3 - worst});
    }

    {
        double worst = 0.0;
        for (int dim : {2, 3})
            for (double alpha : {0.0, 0.5, 1.0})
                worst = std::max(
                    worst, std::fabs(spectral::poincare_min_eig(dim, alpha, grid)
                                         .min_eigenvalue -
                                     (dim + alpha - 1.0)));
        out.properties.push_back(
            {"hemisphere poincare constant equals N+alpha-1", worst <= 1e-3,
             1e-3 - worst});
    }

    {
        // The spectral verdict must match the closed-form threshold sign
        // outside a narrow marginal band.
        Rng rng(options.seed + 31);
        int disagreements = 0;
        for (int trial = 0; trial < 30; ++trial) {
            const double k = rng.uniform(-0.5, 2.0);
            const double l = rng.uniform(-1.0, 2.0);
            const int dim = (trial % 2) ? 3 : 2;
            const double alpha = std::vector<double>{0.0, 0.5, 1.0}[rng.pick(3)];
            const geometry::WeightParams p{k, l, dim, alpha};
            const double lb = regions::breaking_threshold(k, dim, alpha);
            if (std::fabs(l - lb) <= 1e-5)
                continue;
            const auto report = spectral::stability_verdict(p, 1200);
            const bool expect_stable = l < lb;
            if (report.verdict == spectral::Stability::marginal ||
                (report.verdict == spectral::Stability::stable) != expect_stable)
                ++disagreements;
        }
        out.properties.push_back(
            {"stability verdicts agree with the breaking threshold",
             disagreements == 0, -static_cast<double>(disagreements)});
    }

    {
        double margin = std::numeric_limits<double>::infinity();
        for (double alpha : {-0.9, -0.5, -0.1}) {
            const double m = spectral::halfline_stability_margin(alpha, grid);
            margin = std::min({margin, 1e-2 - m, m + 1e-3});
        }
        out.properties.push_back(
            {"half-line stability margin is numerically zero", margin >= 0.0,
             margin});
    }

    return out;
}

// --- functional --------------------------------------------------------------

SuiteResult functional_suite(const Options& options)
{
    SuiteResult out;
    out.suite = "functional";

    {
        // Hand-derived thresholds at (p=2, q=4, N=2, alpha=1).
        const auto th = functional::ckn_thresholds(2.0, 4.0, 2, 1.0);
        const double err =
            std::max(std::fabs(th.a1 - 1.0 / 6.0),
                     std::fabs(th.a2 - (4.0 / (3.0 * std::sqrt(3.0)) - 0.5)));
        out.properties.push_back(
            {"ckn thresholds reproduce the hand-derived pair", err <= 1e-12,
             1e-12 - err});
    }

    {
        // Both thresholds collapse to zero exactly at the critical exponent.
        const auto th = functional::ckn_thresholds(2.0, 6.0, 3, 0.0);
        const double err = std::max(std::fabs(th.a1), std::fabs(th.a2));
        out.properties.push_back(
            {"thresholds vanish at the critical exponent", err <= 1e-12,
             1e-12 - err});
    }

    {
        // The Hardy witness family decreases strictly to the sharp constant.
        const struct {
            double p, k, alpha;
            int dim;
        } triples[] = {{2.0, 0.5, 0.5, 2}, {1.5, 0.3, 0.0, 3}, {3.0, 1.5, 1.0, 2}};
        double margin = std::numeric_limits<double>::infinity();
        for (const auto& t : triples) {
            const double sharp =
                functional::hardy_constant(t.p, t.k, t.alpha, t.dim);
            double prev = std::numeric_limits<double>::infinity();
            for (int j = 0; j <= 10; ++j) {
                const double q = functional::hardy_witness_ratio(
                    std::pow(2.0, -j), t.p, t.k, t.alpha, t.dim);
                margin = std::min({margin, (prev - q) / sharp,
                                   (q - sharp) / sharp});
                prev = q;
            }
        }
        out.properties.push_back(
            {"hardy witness ratios decrease strictly to the sharp constant",
             margin > 0.0, margin});
    }

    {
        // Richardson extrapolation of the witness family hits the constant.
        const struct {
            double p, k, alpha;
            int dim;
        } triples[] = {{2.0, 0.5, 0.5, 2}, {1.5, 0.3, 0.0, 3}, {2.5, 1.0, 1.0, 3}};
        double worst = 0.0;
        for (const auto& t : triples) {
            const double sharp =
                functional::hardy_constant(t.p, t.k, t.alpha, t.dim);
            const double eps = 2e-4;
            const double extrapolated =
                2.0 * functional::hardy_witness_ratio(eps / 2.0, t.p, t.k,
                                                      t.alpha, t.dim) -
                functional::hardy_witness_ratio(eps, t.p, t.k, t.alpha, t.dim);
            worst = std::max(worst, std::fabs(extrapolated - sharp) / sharp);
        }
        out.properties.push_back(
            {"extrapolated witness limit equals the hardy constant",
             worst <= 1e-6, 1e-6 - worst});
    }

    {
        // The radial functional is dilation invariant.
        const functional::CknParams params{0.0, 2.0, 4.0, 2, 1.0};
        const int cells = 1 << 18;
        const double s = params.dim - params.p + params.a * params.p +
                         params.alpha;
        const double decay = s / (params.p - 1.0);
        const double base = functional::ckn_functional_radial(
            functional::sample_minimizer(params, cells), params);
        double worst = 0.0;
        for (double t : {0.5, 2.0}) {
            const double scaled = functional::ckn_functional_radial(
                functional::sample_radial(
                    [&](double r) {
                        return functional::ckn_minimizer(t * r, params);
                    },
                    cells, decay),
                params);
            worst = std::max(worst, std::fabs(scaled - base) / base);
        }
        out.properties.push_back(
            {"the radial quotient is dilation invariant", worst <= 1e-9,
             1e-9 - worst});
    }

    {
        // The explicit profile is a local minimum under radial perturbations.
        Rng rng(options.seed + 41);
        const functional::CknParams params{0.0, 2.0, 4.0, 2, 1.0};
        const int cells = 1 << 15;
        const double s = params.dim - params.p + params.a * params.p +
                         params.alpha;
        const double decay = s / (params.p - 1.0);
        const double base = functional::ckn_functional_radial(
            functional::sample_minimizer(params, cells), params);
        double margin = std::numeric_limits<double>::infinity();
        for (int trial = 0; trial < 10; ++trial) {
            const double c = rng.uniform(0.2, 2.0);
            const double w = rng.uniform(0.1, 0.5);
            const double eps = (trial % 2 ? 1.0 : -1.0) * 0.01;
            const double perturbed = functional::ckn_functional_radial(
                functional::sample_radial(
                    [&](double r) {
                        const double g = (r - c) / w;
                        return functional::ckn_minimizer(r, params) +
                               eps * std::exp(-g * g);
                    },
                    cells, decay),
                params);
            margin = std::min(margin, (perturbed - base) / base + 1e-8);
        }
        out.properties.push_back(
            {"the explicit profile is a local minimum of the quotient",
             margin >= 0.0, margin});
    }

    {
        // At p = q the ground state value is exactly the Hardy constant.
        const functional::CknParams params{0.4, 1.5, 1.5, 2, 0.5};
        const double diff =
            std::fabs(functional::srad(params) -
                      functional::hardy_constant(1.5, 0.4 * 1.5, 0.5, 2));
        out.properties.push_back(
            {"the degenerate window reduces to the hardy constant",
             diff == 0.0, -diff});
    }

    return out;
}

// --- counterex ---------------------------------------------------------------

SuiteResult counterex_suite(const Options&)
{
    SuiteResult out;
    out.suite = "counterex";

    {
        double margin = std::numeric_limits<double>::infinity();
        for (double alpha : {-0.9, -0.5, -0.1})
            for (double eps : {1.0, 0.3, 0.1, 0.03}) {
                const auto rect = counterex::vanishing_sequence(alpha, eps);
                margin = std::min(margin,
                                  (eps - counterex::rect_ratio(rect)) / eps);
            }
        out.properties.push_back(
            {"witness strips push the quotient below every target",
             margin > 0.0, margin});
    }

    {
        double margin = std::numeric_limits<double>::infinity();
        for (double alpha : {-0.9, -0.5, -0.1}) {
            double prev = std::numeric_limits<double>::infinity();
            for (int j = 0; j <= 6; ++j) {
                const double ratio = counterex::rect_ratio(
                    counterex::vanishing_sequence(alpha, std::pow(2.0, -j)));
                margin = std::min(margin, prev - ratio);
                prev = ratio;
            }
        }
        out.properties.push_back(
            {"halving the target strictly decreases the achieved quotient",
             margin > 0.0, margin});
    }

    {
        const auto r1 = counterex::vanishing_sequence(-0.5, 0.1);
        const auto r2 = counterex::vanishing_sequence(-0.5, 0.1);
        const double diff = std::max(
            {std::fabs(r1.a - r2.a), std::fabs(r1.b - r2.b),
             std::fabs(r1.u - r2.u), std::fabs(r1.v - r2.v)});
        out.properties.push_back(
            {"the witness construction is deterministic", diff == 0.0, -diff});
    }

    return out;
}

// --- orthant -----------------------------------------------------------------

SuiteResult orthant_suite(const Options& options)
{
    SuiteResult out;
    out.suite = "orthant";

    {
        orthant::MonomialWeight a;
        a.exponents = {1.0, 1.0};
        const double err = std::fabs(orthant::orthant_constant(0.0, 0.0, 2, a) -
                                     0.5 * std::pow(8.0, 0.75));
        out.properties.push_back(
            {"quarter-plane constant matches the closed form", err <= 1e-10,
             1e-10 - err});
    }

    {
        Rng rng(options.seed + 51);
        double worst = 0.0;
        for (int trial = 0; trial < 6; ++trial) {
            const int dim = (trial % 2) ? 3 : 2;
            const auto a = random_weight(rng, dim);
            const double d = orthant::orthant_constant(0.3, 0.1, dim, a);
            const auto ball =
                orthant::make_orthant_ball(a, 48, rng.uniform(0.5, 3.0));
            worst = std::max(
                worst,
                std::fabs(orthant::rayleigh_ratio(ball, 0.3, 0.1) - d) / d);
        }
        out.properties.push_back(
            {"orthant balls of every radius realise the constant",
             worst <= 1e-9, 1e-9 - worst});
    }

    {
        Rng rng(options.seed + 52);
        double margin = std::numeric_limits<double>::infinity();
        for (int trial = 0; trial < 100; ++trial) {
            const int dim = trial < 60 ? 2 : 3;
            const auto a = random_weight(rng, dim);
            double k = 0.0, l = 0.0;
            draw_certified_pair(rng, trial % 3, dim, a.total(), k, l);
            const double d = orthant::orthant_constant(k, l, dim, a);
            double ratio = 0.0;
            if (dim == 2) {
                const double base = rng.uniform(0.5, 2.0);
                const double c1 = rng.uniform(-0.25, 0.25) * base;
                const double c2 = rng.uniform(-0.15, 0.15) * base;
                const auto set = orthant::make_sector_set(
                    a, 256, [=](double th) {
                        return base + c1 * std::sin(th) +
                               c2 * std::cos(2.0 * th);
                    });
                ratio = orthant::rayleigh_ratio(set, k, l);
            } else {
                const double base = rng.uniform(0.5, 2.0);
                const double c1 = rng.uniform(-0.2, 0.2) * base;
                const double c2 = rng.uniform(-0.15, 0.15) * base;
                const auto set = orthant::make_octant_set(
                    a, 64, [=](double phi, double th) {
                        return base + c1 * std::sin(phi) * std::cos(th) +
                               c2 * std::cos(phi);
                    });
                ratio = orthant::rayleigh_ratio(set, k, l);
            }
            margin = std::min(margin, ratio - (d - 1e-6));
        }
        out.properties.push_back(
            {"random orthant star sets stay above the constant",
             margin >= 0.0, margin});
    }

    {
        Rng rng(options.seed + 53);
        double worst = 0.0;
        for (int trial = 0; trial < 6; ++trial) {
            const int dim = (trial % 2) ? 3 : 2;
            const auto a = random_weight(rng, dim);
            const auto rule = orthant::orthant_rule(dim, a, 64);
            double mass = 0.0;
            for (double w : rule.weight)
                mass += w;
            const double kap = orthant::orthant_kappa(dim, a);
            worst = std::max(worst, std::fabs(mass - kap) / kap);
        }
        out.properties.push_back(
            {"tensor rule mass agrees with the adaptive surface integral",
             worst <= 1e-12, 1e-12 - worst});
    }

    return out;
}

}  // namespace

bool SuiteResult::all_passed() const
{
    for (const auto& p : properties)
        if (!p.passed)
            return false;
    return true;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {
        "geometry", "rearrange", "spectral", "functional", "counterex",
        "orthant"};
    return names;
}

SuiteResult run_suite(const std::string& suite, const Options& options)
{
    if (suite == "geometry")
        return geometry_suite(options);
    if (suite == "rearrange")
        return rearrange_suite(options);
    if (suite == "spectral")
        return spectral_suite(options);
    if (suite == "functional")
        return functional_suite(options);
    if (suite == "counterex")
        return counterex_suite(options);
    if (suite == "orthant")
        return orthant_suite(options);
    require(false, "unknown verification suite: " + suite);
    return {};
}

std::vector<SuiteResult> run_suites(const std::string& suite_or_all,
                                    const Options& options)
{
    std::vector<SuiteResult> results;
    if (suite_or_all == "all") {
        for (const auto& name : suite_names())
            results.push_back(run_suite(name, options));
        return results;
    }
    results.push_back(run_suite(suite_or_all, options));
    return results;
}

}  // namespace isoperim::verify
