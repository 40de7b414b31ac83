#include "isoperim/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>

#include "isoperim/detail/fd.hpp"
#include "isoperim/errors.hpp"
#include "isoperim/regions.hpp"

namespace isoperim::rearrange {

using detail::require;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2.0;

double sinc(double x)
{
    return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
}

/// Exact integral of h dTheta over the angular cell [a, b].  Cells touching
/// the hemisphere equator fold the vanishing cosine into a Gauss-Jacobi
/// endpoint weight so the integrand handed to quadrature stays analytic.
double angular_cell_mass(int dim, double alpha, double a, double b)
{
    if (dim == 2) {
        const bool left_end = a <= -kHalfPi + 1e-13;
        const bool right_end = b >= kHalfPi - 1e-13;
        quad::EndpointWeight w{left_end ? alpha : 0.0, right_end ? alpha : 0.0};
        std::function<double(double)> f;
        if (left_end)
            f = [alpha](double th) { return std::pow(sinc(th + kHalfPi), alpha); };
        else if (right_end)
            f = [alpha](double th) { return std::pow(sinc(kHalfPi - th), alpha); };
        else
            f = [alpha](double th) { return std::pow(std::cos(th), alpha); };
        return quad::integrate(f, a, b, w);
    }
    const double ring =
        2.0 * std::pow(kPi, 0.5 * (dim - 1)) / quad::gamma_fn(0.5 * (dim - 1));
    const bool right_end = b >= kHalfPi - 1e-13;
    quad::EndpointWeight w{0.0, right_end ? alpha : 0.0};
    const int sin_power = dim - 2;
    std::function<double(double)> f;
    if (right_end)
        f = [alpha, sin_power](double th) {
            return std::pow(std::sin(th), sin_power) *
                   std::pow(sinc(kHalfPi - th), alpha);
        };
    else
        f = [alpha, sin_power](double th) {
            return std::pow(std::sin(th), sin_power) * std::pow(std::cos(th), alpha);
        };
    return ring * quad::integrate(f, a, b, w);
}

/// integral of rho^{order-1} over [lo, hi] (the radial factor of a cell mass
/// against |x|^e dmu with order = e + N + alpha).
double radial_mass(double lo, double hi, double order)
{
    return (std::pow(hi, order) - std::pow(lo, order)) / order;
}

void check_grid(const GriddedFunction& u)
{
    require(u.dim >= 2, "dimension must be at least 2");
    require(u.alpha > -1.0, "alpha must exceed -1");
    require(u.r_edges.size() >= 3 && u.r_edges.front() == 0.0,
            "radial grid must start at 0 with at least two cells");
    require(std::is_sorted(u.r_edges.begin(), u.r_edges.end()) &&
                std::adjacent_find(u.r_edges.begin(), u.r_edges.end()) ==
                    u.r_edges.end(),
            "radial edges must be strictly increasing");
    require(u.values.size() + 1 == u.r_edges.size(),
            "value rows must match radial cells");
    require(u.r_centers.size() == u.values.size(),
            "radial centers must match radial cells");
    require(u.theta_mass.size() + 1 == u.theta_edges.size(),
            "angular masses must match angular cells");
    require(u.theta_centers.size() == u.theta_mass.size(),
            "angular centers must match angular cells");
    for (const auto& row : u.values) {
        require(row.size() == u.theta_mass.size(),
                "value columns must match angular cells");
        for (double v : row)
            require(v >= 0.0, "values must be non-negative");
    }
}

void check_weights(const GriddedFunction& u, const geometry::WeightParams& p)
{
    p.validate();
    require(u.dim == p.dim && u.alpha == p.alpha,
            "grid dimension/alpha must match the weight parameters");
}

struct LevelCell {
    double value = 0.0;
    double mass = 0.0;
};

/// Sorted distinct positive values with aggregated masses (descending).
std::vector<LevelCell> descending_levels(std::vector<LevelCell> cells)
{
    std::sort(cells.begin(), cells.end(),
              [](const LevelCell& a, const LevelCell& b) { return a.value > b.value; });
    std::vector<LevelCell> merged;
    for (const auto& c : cells) {
        if (c.value <= 0.0)
            continue;
        if (!merged.empty() && merged.back().value == c.value)
            merged.back().mass += c.mass;
        else
            merged.push_back(c);
    }
    return merged;
}

void check_ray_function(const RayFunction& v)
{
    require(v.rule.dim >= 2, "dimension must be at least 2");
    const std::size_t rays = v.rule.theta.size();
    require(rays >= 3, "a ray function needs at least 3 rays");
    require(v.z_edges.size() == rays && v.values.size() == rays,
            "per-ray arrays must match the angular rule");
    for (std::size_t r = 0; r < rays; ++r) {
        const auto& e = v.z_edges[r];
        require(e.size() >= 2 && e.front() >= 0.0,
                "ray edges must start at a non-negative radius");
        require(std::is_sorted(e.begin(), e.end()) &&
                    std::adjacent_find(e.begin(), e.end()) == e.end(),
                "ray edges must be strictly increasing");
        require(v.values[r].size() + 1 == e.size(),
                "ray values must match ray cells");
        for (double val : v.values[r])
            require(val >= 0.0, "values must be non-negative");
    }
}

void check_cells_1d(const Cells1D& f)
{
    require(f.edges.size() >= 2 && f.edges.front() >= 0.0,
            "edges must start at a non-negative point");
    require(std::is_sorted(f.edges.begin(), f.edges.end()) &&
                std::adjacent_find(f.edges.begin(), f.edges.end()) == f.edges.end(),
            "edges must be strictly increasing");
    require(f.values.size() + 1 == f.edges.size(), "values must match cells");
    for (double v : f.values)
        require(v >= 0.0, "values must be non-negative");
}

/// Weighted jump sum: total variation of the piecewise-constant function
/// against t^delta, counting the boundary jumps from/to zero.
double jump_sum(const Cells1D& f, double delta)
{
    double total = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < f.edges.size(); ++i) {
        const double next = i < f.values.size() ? f.values[i] : 0.0;
        total += std::pow(f.edges[i], delta) * std::abs(next - prev);
        prev = next;
    }
    return total;
}

bool non_increasing(const std::vector<double>& v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[i - 1])
            return false;
    return true;
}

}  // namespace

GriddedFunction make_gridded(int dim, double alpha, int radial_cells,
                             int angular_cells, double r_max,
                             const std::function<double(double, double)>& f)
{
    require(dim >= 2, "dimension must be at least 2");
    require(alpha > -1.0, "alpha must exceed -1");
    require(radial_cells >= 2 && angular_cells >= 2,
            "grid needs at least 2 cells per direction");
    require(r_max > 0.0, "r_max must be positive");

    GriddedFunction g;
    g.dim = dim;
    g.alpha = alpha;
    g.r_edges.resize(radial_cells + 1);
    for (int i = 0; i <= radial_cells; ++i)
        g.r_edges[i] = r_max * i / radial_cells;
    g.r_centers.resize(radial_cells);
    for (int i = 0; i < radial_cells; ++i)
        g.r_centers[i] = 0.5 * (g.r_edges[i] + g.r_edges[i + 1]);

    const double lo = dim == 2 ? -kHalfPi : 0.0;
    g.theta_edges.resize(angular_cells + 1);
    for (int j = 0; j <= angular_cells; ++j)
        g.theta_edges[j] = lo + (kHalfPi - lo) * j / angular_cells;
    g.theta_centers.resize(angular_cells);
    g.theta_mass.resize(angular_cells);
    for (int j = 0; j < angular_cells; ++j) {
        g.theta_centers[j] = 0.5 * (g.theta_edges[j] + g.theta_edges[j + 1]);
        g.theta_mass[j] =
            angular_cell_mass(dim, alpha, g.theta_edges[j], g.theta_edges[j + 1]);
    }

    g.values.assign(radial_cells, std::vector<double>(angular_cells));
    for (int i = 0; i < radial_cells; ++i)
        for (int j = 0; j < angular_cells; ++j) {
            const double v = f(g.r_centers[i], g.theta_centers[j]);
            require(v >= 0.0, "sampled values must be non-negative");
            g.values[i][j] = v;
        }
    return g;
}

double profile_value(const RadialProfile& s, double r)
{
    auto it = std::upper_bound(s.edges.begin(), s.edges.end(), r);
    if (it == s.edges.end())
        return 0.0;
    return s.values[static_cast<std::size_t>(it - s.edges.begin())];
}

RayFunction make_ray_function(int dim, double alpha, int rays, int z_cells,
                              double z_max,
                              const std::function<double(double, double)>& f)
{
    require(z_cells >= 2, "grid needs at least 2 cells");
    require(z_max > 0.0, "z_max must be positive");
    RayFunction v;
    v.rule = geometry::angular_rule(dim, alpha, rays);
    std::vector<double> edges(z_cells + 1);
    for (int i = 0; i <= z_cells; ++i)
        edges[i] = z_max * i / z_cells;
    const std::size_t n_rays = v.rule.theta.size();
    v.z_edges.assign(n_rays, edges);
    v.values.assign(n_rays, std::vector<double>(z_cells));
    for (std::size_t r = 0; r < n_rays; ++r)
        for (int i = 0; i < z_cells; ++i) {
            const double val =
                f(0.5 * (edges[i] + edges[i + 1]), v.rule.theta[r]);
            require(val >= 0.0, "sampled values must be non-negative");
            v.values[r][i] = val;
        }
    return v;
}

double radius_for_measure(double measure, const geometry::WeightParams& p)
{
    p.validate();
    require(measure > 0.0 && std::isfinite(measure),
            "measure must be positive and finite");
    const double o = p.volume_order();
    return std::pow(o * measure / quad::kappa(p.dim, p.alpha), 1.0 / o);
}

double set_symmetrize(const geometry::StarSet& set, const geometry::WeightParams& p)
{
    p.validate();
    require(set.dim() == p.dim && set.alpha() == p.alpha,
            "set grid must match the weight parameters");
    return radius_for_measure(geometry::weighted_volume(set, p.l), p);
}

double measure_above(const GriddedFunction& u, double t,
                     const geometry::WeightParams& p)
{
    check_grid(u);
    check_weights(u, p);
    const double o = p.volume_order();
    double total = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double rmass = radial_mass(u.r_edges[i], u.r_edges[i + 1], o);
        for (std::size_t j = 0; j < u.theta_mass.size(); ++j)
            if (u.values[i][j] > t)
                total += rmass * u.theta_mass[j];
    }
    return total;
}

double measure_above(const RadialProfile& s, double t,
                     const geometry::WeightParams& p)
{
    p.validate();
    const double o = p.volume_order();
    double radius = 0.0;
    for (std::size_t i = 0; i < s.values.size(); ++i)
        if (s.values[i] > t)
            radius = s.edges[i];
    return quad::kappa(p.dim, p.alpha) * std::pow(radius, o) / o;
}

RadialProfile schwarz_symmetrize(const GriddedFunction& u,
                                 const geometry::WeightParams& p)
{
    check_grid(u);
    check_weights(u, p);
    const double o = p.volume_order();

    std::vector<LevelCell> cells;
    cells.reserve(u.values.size() * u.theta_mass.size());
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double rmass = radial_mass(u.r_edges[i], u.r_edges[i + 1], o);
        for (std::size_t j = 0; j < u.theta_mass.size(); ++j)
            cells.push_back({u.values[i][j], rmass * u.theta_mass[j]});
    }

    RadialProfile out;
    double cumulative = 0.0;
    for (const auto& level : descending_levels(std::move(cells))) {
        cumulative += level.mass;
        out.edges.push_back(radius_for_measure(cumulative, p));
        out.values.push_back(level.value);
    }
    return out;
}

RadialProfile schwarz_symmetrize(const RadialProfile& s,
                                 const geometry::WeightParams& p)
{
    p.validate();
    require(s.edges.size() == s.values.size(), "edges must match values");
    require(std::is_sorted(s.edges.begin(), s.edges.end()) &&
                std::adjacent_find(s.edges.begin(), s.edges.end()) == s.edges.end(),
            "edges must be strictly increasing");
    require(non_increasing(s.values), "a radial profile must be non-increasing");

    RadialProfile out;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        require(s.values[i] >= 0.0, "values must be non-negative");
        if (s.values[i] == 0.0)
            break;  // zero tail carries no mass
        if (!out.values.empty() && out.values.back() == s.values[i])
            out.edges.back() = s.edges[i];  // merge the equal-value shells
        else {
            out.edges.push_back(s.edges[i]);
            out.values.push_back(s.values[i]);
        }
    }
    return out;
}

RayFunction starshaped_rearrange(const RayFunction& v, int dim)
{
    check_ray_function(v);
    require(dim == v.rule.dim, "dimension must match the angular rule");

    RayFunction out;
    out.rule = v.rule;
    out.z_edges.resize(v.z_edges.size());
    out.values.resize(v.values.size());

    for (std::size_t r = 0; r < v.values.size(); ++r) {
        const auto& edges = v.z_edges[r];
        const auto& vals = v.values[r];
        const bool all_zero =
            std::all_of(vals.begin(), vals.end(), [](double x) { return x == 0.0; });
        if (non_increasing(vals) && (edges.front() == 0.0 || all_zero)) {
            out.z_edges[r] = edges;
            out.values[r] = vals;
            continue;
        }

        std::vector<LevelCell> cells;
        cells.reserve(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i)
            cells.push_back({vals[i], std::pow(edges[i + 1], dim) -
                                          std::pow(edges[i], dim)});

        auto& oe = out.z_edges[r];
        auto& ov = out.values[r];
        oe.push_back(0.0);
        double zeta = 0.0;
        for (const auto& level : descending_levels(std::move(cells))) {
            zeta += level.mass;
            oe.push_back(std::pow(zeta, 1.0 / dim));
            ov.push_back(level.value);
        }
        if (ov.empty()) {  // zero ray: keep a trivial cell
            oe.push_back(edges.back());
            ov.push_back(0.0);
        }
    }
    return out;
}

double ray_measure_above(const RayFunction& v, std::size_t ray, double t, int dim)
{
    check_ray_function(v);
    require(ray < v.values.size(), "ray index out of range");
    const auto& edges = v.z_edges[ray];
    const auto& vals = v.values[ray];
    double total = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i)
        if (vals[i] > t)
            total += (std::pow(edges[i + 1], dim) - std::pow(edges[i], dim)) / dim;
    return total;
}

LandesReport decreasing_rearrange_1d(const Cells1D& f, double delta)
{
    check_cells_1d(f);
    require(delta >= 0.0, "delta must be non-negative");

    LandesReport report;
    const bool all_zero = std::all_of(f.values.begin(), f.values.end(),
                                      [](double x) { return x == 0.0; });
    if (non_increasing(f.values) && (f.edges.front() == 0.0 || all_zero)) {
        report.rearranged = f;
    } else {
        std::vector<LevelCell> cells;
        cells.reserve(f.values.size());
        for (std::size_t i = 0; i < f.values.size(); ++i)
            cells.push_back({f.values[i], f.edges[i + 1] - f.edges[i]});
        auto& out = report.rearranged;
        out.edges.push_back(0.0);
        double length = 0.0;
        for (const auto& level : descending_levels(std::move(cells))) {
            length += level.mass;
            out.edges.push_back(length);
            out.values.push_back(level.value);
        }
        if (out.values.empty()) {
            out.edges.push_back(f.edges.back());
            out.values.push_back(0.0);
        }
    }
    report.lhs = jump_sum(report.rearranged, delta);
    report.rhs = jump_sum(f, delta);
    return report;
}

PairCheck hardy_littlewood_check(const GriddedFunction& u,
                                 const GriddedFunction& v,
                                 const geometry::WeightParams& p)
{
    check_grid(u);
    check_grid(v);
    check_weights(u, p);
    require(u.r_edges == v.r_edges && u.theta_edges == v.theta_edges &&
                u.dim == v.dim && u.alpha == v.alpha,
            "both functions must share one grid");

    const double o = p.volume_order();
    PairCheck out;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double rmass = radial_mass(u.r_edges[i], u.r_edges[i + 1], o);
        for (std::size_t j = 0; j < u.theta_mass.size(); ++j)
            out.lhs += u.values[i][j] * v.values[i][j] * rmass * u.theta_mass[j];
    }

    const RadialProfile us = schwarz_symmetrize(u, p);
    const RadialProfile vs = schwarz_symmetrize(v, p);
    std::vector<double> cuts{0.0};
    cuts.insert(cuts.end(), us.edges.begin(), us.edges.end());
    cuts.insert(cuts.end(), vs.edges.begin(), vs.edges.end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    const double kap = quad::kappa(p.dim, p.alpha);
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const double mid = 0.5 * (cuts[c] + cuts[c + 1]);
        out.rhs += profile_value(us, mid) * profile_value(vs, mid) * kap *
                   radial_mass(cuts[c], cuts[c + 1], o);
    }
    return out;
}

double gradient_integral(const GriddedFunction& u, double exponent,
                         double power)
{
    check_grid(u);
    require(power >= 1.0, "the gradient exponent must be at least 1");
    const double om = exponent + u.dim + u.alpha;
    require(om > 0.0, "exponent+N+alpha must be positive");

    const std::size_t nr = u.values.size();
    const std::size_t nt = u.theta_mass.size();
    require(nr >= 3 && nt >= 3, "gradients need at least 3 cells per direction");

    // d/dr along each angular column and d/dtheta along each radial row.
    std::vector<std::vector<double>> dr(nr, std::vector<double>(nt));
    std::vector<std::vector<double>> dt(nr, std::vector<double>(nt));
    std::vector<double> column(nr);
    for (std::size_t j = 0; j < nt; ++j) {
        for (std::size_t i = 0; i < nr; ++i)
            column[i] = u.values[i][j];
        const auto d = detail::derivative_on_grid(u.r_centers, column);
        for (std::size_t i = 0; i < nr; ++i)
            dr[i][j] = d[i];
    }
    for (std::size_t i = 0; i < nr; ++i)
        dt[i] = detail::derivative_on_grid(u.theta_centers, u.values[i]);

    double out = 0.0;
    for (std::size_t i = 0; i < nr; ++i) {
        const double rmass = radial_mass(u.r_edges[i], u.r_edges[i + 1], om);
        for (std::size_t j = 0; j < nt; ++j) {
            const double grad = std::hypot(dr[i][j], dt[i][j] / u.r_centers[i]);
            out += std::pow(grad, power) * rmass * u.theta_mass[j];
        }
    }
    return out;
}

double weighted_integral(const GriddedFunction& u, double exponent,
                         double power)
{
    check_grid(u);
    require(power >= 0.0, "power must be non-negative");
    const double om = exponent + u.dim + u.alpha;
    require(om > 0.0, "exponent+N+alpha must be positive");

    double out = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double rmass = radial_mass(u.r_edges[i], u.r_edges[i + 1], om);
        for (std::size_t j = 0; j < u.theta_mass.size(); ++j)
            out += std::pow(u.values[i][j], power) * rmass * u.theta_mass[j];
    }
    return out;
}

PsCheck polya_szego_check(const GriddedFunction& u, double p_exp,
                          const geometry::WeightParams& p)
{
    check_grid(u);
    check_weights(u, p);
    require(p_exp >= 1.0, "the gradient exponent must be at least 1");
    const auto verdict = regions::classify(p);
    require(verdict.label == regions::Label::half_ball_optimal,
            "weight parameters must lie in a certified half-ball-optimal region");

    const double m = p_exp * p.k + (1.0 - p_exp) * p.l;
    const double om = m + p.dim + p.alpha;
    require(om > 0.0, "m+N+alpha must be positive");

    const std::size_t nr = u.values.size();
    const std::size_t nt = u.theta_mass.size();
    require(nr >= 3 && nt >= 3, "gradients need at least 3 cells per direction");

    PsCheck out;
    out.lhs = gradient_integral(u, m, p_exp);

    const RadialProfile star = schwarz_symmetrize(u, p);
    std::vector<double> samples(nr);
    for (std::size_t i = 0; i < nr; ++i)
        samples[i] = profile_value(star, u.r_centers[i]);
    const auto ds = detail::derivative_on_grid(u.r_centers, samples);
    const double kap = quad::kappa(p.dim, p.alpha);
    for (std::size_t i = 0; i < nr; ++i)
        out.rhs += std::pow(std::abs(ds[i]), p_exp) * kap *
                   radial_mass(u.r_edges[i], u.r_edges[i + 1], om);

    const double hr = u.r_centers[1] - u.r_centers[0];
    const double ht = u.theta_centers[1] - u.theta_centers[0];
    out.tolerance =
        5.0 * (hr * hr + ht * ht) * std::max({out.lhs, out.rhs, 1.0});
    return out;
}

PairCheck interpolation_bound_check(const RayFunction& v, double A,
                                    const geometry::WeightParams& p)
{
    check_ray_function(v);
    p.validate_for_ratio();
    require(v.rule.dim == p.dim && v.rule.alpha == p.alpha,
            "ray grid must match the weight parameters");
    const double s = p.dim + p.alpha - 1.0;
    const double B = s / p.perimeter_order();
    require(A >= 0.0 && A <= B * B,
            "A must lie in [0, ((N+alpha-1)/(k+N+alpha-1))^2]");
    const std::size_t rays = v.values.size();
    for (std::size_t r = 1; r < rays; ++r)
        require(v.z_edges[r] == v.z_edges[0],
                "all rays must share one z grid");

    const auto& edges = v.z_edges[0];
    const std::size_t nz = v.values[0].size();
    require(nz >= 3 && rays >= 3, "gradients need at least 3 cells per direction");
    std::vector<double> centers(nz);
    for (std::size_t i = 0; i < nz; ++i)
        centers[i] = 0.5 * (edges[i] + edges[i + 1]);

    std::vector<std::vector<double>> dz(rays), dth(nz, std::vector<double>(rays));
    for (std::size_t r = 0; r < rays; ++r)
        dz[r] = detail::derivative_on_grid(centers, v.values[r]);
    std::vector<double> slice(rays);
    for (std::size_t i = 0; i < nz; ++i) {
        for (std::size_t r = 0; r < rays; ++r)
            slice[r] = v.values[r][i];
        dth[i] = detail::derivative_on_grid(v.rule.theta, slice);
    }

    double lhs = 0.0, full = 0.0, partial = 0.0;
    for (std::size_t r = 0; r < rays; ++r)
        for (std::size_t i = 0; i < nz; ++i) {
            const double w = v.rule.weight[r] * (edges[i + 1] - edges[i]) *
                             std::pow(centers[i], s);
            const double a = std::abs(dz[r][i]);
            const double c = std::abs(dth[i][r]) / centers[i];
            lhs += w * std::sqrt(a * a + B * B * c * c);
            full += w * std::sqrt(a * a + c * c);
            partial += w * a;
        }

    PairCheck out;
    out.lhs = lhs;
    out.rhs = std::pow(full, A) * std::pow(partial, 1.0 - A);
    return out;
}

HolderCheck starshaped_holder_check(const geometry::StarSet& set,
                                    const geometry::WeightParams& p)
{
    p.validate_for_ratio();
    require(set.dim() == p.dim && set.alpha() == p.alpha,
            "set grid must match the weight parameters");
    const double s = p.dim + p.alpha - 1.0;
    const double t = s + 1.0;
    require(p.l * s / t <= p.k,
            "l (N+alpha-1)/(N+alpha) must not exceed k");

    const double K = p.perimeter_order();
    const double o = p.volume_order();
    const double lp = geometry::horiuchi_exponent(p);

    HolderCheck out;
    out.d1 = std::pow(K / o, K / o) *
             std::pow(t / s, s * (p.l - p.k + 1.0) / o);
    out.lhs = std::pow(geometry::weighted_volume(set, lp), K / o);
    out.rhs = out.d1 *
              std::pow(geometry::weighted_volume(set, 0.0),
                       s * (p.l - p.k + 1.0) / o) *
              std::pow(geometry::weighted_volume(set, -1.0),
                       (p.k * t - p.l * s) / o);
    return out;
}

}  // namespace isoperim::rearrange
