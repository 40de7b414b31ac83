#include "isoperim/functional.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "isoperim/detail/fd.hpp"
#include "isoperim/errors.hpp"
#include "isoperim/quad.hpp"

namespace isoperim::functional {

using detail::require;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double radial_mass(double lo, double hi, double order)
{
    return (std::pow(hi, order) - std::pow(lo, order)) / order;
}

void check_samples(const RadialFunction& v)
{
    const std::size_t n = v.centers.size();
    require(n >= 3, "gradients need at least 3 cells");
    require(v.edges.size() == n + 1 && v.head.size() == n && v.tail.size() == n,
            "edge/center/value sizes are inconsistent");
    require(v.edges.front() == 0.0 && v.edges.back() == 1.0,
            "the partition must run from 0 to 1");
    for (std::size_t i = 0; i + 1 < v.edges.size(); ++i)
        require(v.edges[i] < v.edges[i + 1], "edges must increase strictly");
    for (std::size_t i = 0; i < n; ++i)
        require(std::isfinite(v.head[i]) && std::isfinite(v.tail[i]),
                "samples must be finite");
    require(!std::isnan(v.decay), "the decay rate must not be NaN");
}

}  // namespace

double CknParams::b() const
{
    return ckn_exponents(a, p, q, dim, alpha).b;
}

double CknParams::p_star() const
{
    return ckn_exponents(a, p, q, dim, alpha).p_star;
}

void CknParams::validate() const
{
    require(dim >= 2, "N must be at least 2");
    require(alpha >= 0.0, "alpha must be non-negative");
    require(p >= 1.0, "p must be at least 1");
    require(q >= p, "q must be at least p");
    require(q <= p_star(), "q must not exceed the critical exponent");
    require(a > 1.0 - (dim + alpha) / p, "a must exceed 1 - (N+alpha)/p");
}

CknExponents ckn_exponents(double a, double p, double q, int dim, double alpha)
{
    const double t = dim + alpha;
    CknExponents out;
    out.b = t * (1.0 / p - 1.0 / q) + a - 1.0;
    out.p_star = p < t ? t * p / (t - p) : kInf;
    return out;
}

double q_functional(const rearrange::GriddedFunction& u,
                    const geometry::WeightParams& P)
{
    P.validate_for_ratio();
    require(P.k <= P.l + 1.0,
            "k must not exceed l+1 (beyond it the gradient quotient no longer "
            "tracks the perimeter/volume quotient)");
    require(u.dim == P.dim && u.alpha == P.alpha,
            "grid must match the weight parameters");

    double peak = 0.0;
    for (const auto& ring : u.values)
        for (double value : ring)
            peak = std::max(peak, value);
    require(peak > 0.0, "u must not be identically zero");
    require(!u.values.empty(), "grid must not be empty");
    for (double value : u.values.back())
        require(value == 0.0,
                "u must vanish on the outermost radial ring (support chopped "
                "off by the grid boundary hides a surface term)");

    const double num = rearrange::gradient_integral(u, P.k, 1.0);
    const double den = rearrange::weighted_integral(
        u, P.l, P.volume_order() / P.perimeter_order());
    return num / std::pow(den, P.ratio_exponent());
}

double hardy_constant(double p, double k, double alpha, int dim)
{
    require(dim >= 2, "N must be at least 2");
    require(p >= 1.0, "p must be at least 1");
    require(alpha >= 0.0, "alpha must be non-negative");
    const double s = dim - p + k + alpha;
    require(s > 0.0, "N-p+k+alpha must be positive");
    return std::pow(s / p, p);
}

double hardy_witness_ratio(double eps, double p, double k, double alpha,
                           int dim)
{
    require(eps > 0.0, "eps must be positive");
    require(dim >= 2, "N must be at least 2");
    require(p >= 1.0, "p must be at least 1");
    require(alpha >= 0.0, "alpha must be non-negative");
    const double s = dim - p + k + alpha;
    require(s > 0.0, "N-p+k+alpha must be positive");

    // With M = (s+eps)/p the profile min(1, r^-M) turns both sides into
    // power integrals sharing the hemisphere factor: gradient side
    // M^p/eps, bulk side 1/s + 1/eps.
    const double m = (s + eps) / p;
    return std::pow(m, p) / (1.0 + eps / s);
}

CknThresholds ckn_thresholds(double p, double q, int dim, double alpha)
{
    require(dim >= 2, "N must be at least 2");
    require(alpha >= 0.0, "alpha must be non-negative");
    require(p > 1.0, "p must exceed 1");
    require(q > p, "q must exceed p");
    const double t = dim + alpha;
    if (p < t)
        require(q <= t * p / (t - p), "q must not exceed the critical exponent");

    const double window = q - q / p + 1.0;
    const double shift = 1.0 - t / p;
    CknThresholds out;
    out.a1 = (t - 1.0) / window + shift;
    out.a2 = (t - 1.0) / (window * std::sqrt(t * (1.0 / p - 1.0 / q))) + shift;
    return out;
}

SymmetryReport ckn_symmetry_range(const CknParams& params)
{
    params.validate();
    require(params.p > 1.0, "p must exceed 1");
    require(params.q > params.p,
            "q must exceed p (at p = q the sharp value is the Hardy constant "
            "and needs no reduction)");
    const auto th =
        ckn_thresholds(params.p, params.q, params.dim, params.alpha);

    const double t = params.dim + params.alpha;
    const double shifted = params.a + t / params.p - 1.0;  // > 0 when valid
    SymmetryReport out;
    out.l = params.q * shifted - t;
    out.k = (1.0 + params.q - params.q / params.p) * shifted - t + 1.0;
    const geometry::WeightParams mapped{out.k, out.l, params.dim,
                                        params.alpha};
    out.verdict = regions::classify(mapped);
    out.range = params.a <= th.a2 ? SymmetryRange::guaranteed_radial
                                  : SymmetryRange::not_covered;
    return out;
}

double ckn_minimizer(double r, const CknParams& params)
{
    params.validate();
    require(params.p > 1.0, "p must exceed 1 (the minimizing family needs "
                            "p(p-1) > 0)");
    require(params.q > params.p,
            "q must exceed p (the minimizing family degenerates at p = q)");
    require(r >= 0.0, "r must be non-negative");
    const double s =
        params.dim - params.p + params.a * params.p + params.alpha;
    const double expo =
        s * (params.q - params.p) / (params.p * (params.p - 1.0));
    return std::pow(1.0 + std::pow(r, expo),
                    params.p / (params.p - params.q));
}

RadialFunction sample_radial(const std::function<double(double)>& v,
                             int cells, double decay)
{
    require(cells >= 8, "sampling needs at least 8 cells");
    require(!std::isnan(decay), "the decay rate must not be NaN");

    RadialFunction out;
    out.decay = decay;
    out.edges.resize(cells + 1);
    for (int i = 0; i <= cells; ++i)
        out.edges[i] = 1.0 * i / cells;
    out.centers.resize(cells);
    out.head.resize(cells);
    out.tail.resize(cells);
    for (int i = 0; i < cells; ++i) {
        out.centers[i] = 0.5 * (out.edges[i] + out.edges[i + 1]);
        out.head[i] = v(out.centers[i]);
        out.tail[i] = v(1.0 / out.centers[i]);
        require(std::isfinite(out.head[i]) && std::isfinite(out.tail[i]),
                "samples must be finite");
    }
    return out;
}

RadialFunction sample_minimizer(const CknParams& params, int cells)
{
    params.validate();
    require(params.p > 1.0, "p must exceed 1 (the minimizing family needs "
                            "p(p-1) > 0)");
    require(params.q > params.p,
            "q must exceed p (the minimizing family degenerates at p = q)");
    const double s =
        params.dim - params.p + params.a * params.p + params.alpha;
    const double expo =
        s * (params.q - params.p) / (params.p * (params.p - 1.0));
    const double outer = params.p / (params.p - params.q);
    auto u = [expo, outer](double r) {
        return std::pow(1.0 + std::pow(r, expo), outer);
    };
    return sample_radial(u, cells, s / (params.p - 1.0));
}

double ckn_functional_radial(const RadialFunction& v, const CknParams& params)
{
    params.validate();
    check_samples(v);

    const double grad_order = params.a * params.p + params.alpha + params.dim;
    const double bulk_order = params.b() * params.q + params.alpha + params.dim;
    // With v = O(r^-decay) the reflected integrands behave like
    // s^{p(decay+1)-grad_order-1} and s^{q decay-bulk_order-1} near s = 0;
    // both powers must stay integrable or the sums below are meaningless.
    if (!std::isinf(v.decay)) {
        require(grad_order < params.p * (v.decay + 1.0),
                "the gradient tail integral diverges at the declared decay");
        require(bulk_order < params.q * v.decay,
                "the bulk tail integral diverges at the declared decay");
    }

    const auto dhead = detail::derivative_on_grid(v.centers, v.head);
    const auto dtail = detail::derivative_on_grid(v.centers, v.tail);

    double num = 0.0;
    double den = 0.0;
    const std::size_t n = v.centers.size();
    for (std::size_t i = 0; i < n; ++i) {
        num += std::pow(std::abs(dhead[i]), params.p) *
               radial_mass(v.edges[i], v.edges[i + 1], grad_order);
        den += std::pow(std::abs(v.head[i]), params.q) *
               radial_mass(v.edges[i], v.edges[i + 1], bulk_order);
    }
    // Reflected halves: r = 1/s sends int_1^inf r^{g-1} F(r) dr to
    // int_0^1 s^{-g-1} F(1/s) ds, and dv/dr = -s^2 w'(s).
    for (std::size_t i = 0; i < n; ++i) {
        const double s = v.centers[i];
        const double width = v.edges[i + 1] - v.edges[i];
        num += std::pow(s, 2.0 * params.p - grad_order - 1.0) *
               std::pow(std::abs(dtail[i]), params.p) * width;
        den += std::pow(s, -bulk_order - 1.0) *
               std::pow(std::abs(v.tail[i]), params.q) * width;
    }

    if (!std::isfinite(num) || !std::isfinite(den))
        throw convergence_error(
            "tail sums came out non-finite; the declared decay rate does not "
            "match the samples");
    require(den > 0.0, "v must not be identically zero");

    const double kap = quad::kappa(params.dim, params.alpha);
    return std::pow(kap, 1.0 - params.p / params.q) * num *
           std::pow(den, -params.p / params.q);
}

double srad(const CknParams& params, int cells)
{
    params.validate();
    if (params.p == params.q)
        return hardy_constant(params.p, params.a * params.p, params.alpha,
                              params.dim);
    require(params.p > 1.0,
            "p must exceed 1 when p < q (no minimizing family at p = 1)");
    return ckn_functional_radial(sample_minimizer(params, cells), params);
}

}  // namespace isoperim::functional
