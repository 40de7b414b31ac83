#include "isoperim/geometry.hpp"

#include <cmath>

#include "isoperim/detail/fd.hpp"
#include "isoperim/errors.hpp"

namespace isoperim::geometry {

using detail::require;

namespace {

constexpr double pi = 3.14159265358979323846;

// sin(s)/s with the removable singularity handled; relative error ~eps.
double sinc(double s)
{
    if (std::fabs(s) < 1e-4) {
        const double s2 = s * s;
        return 1.0 - s2 / 6.0 * (1.0 - s2 / 20.0);
    }
    return std::sin(s) / s;
}

// cos((pi/2) t) / ((1-t)(1+t)) on [-1,1]; tends to pi/4 at both ends.
// Evaluated via sin of the distance to the nearest zero so the value stays
// fully accurate when a quadrature node sits close to +-1.
double planar_fold(double t)
{
    const double u = (t >= 0.0) ? 1.0 - t : 1.0 + t;  // distance to nearest end
    const double other = 2.0 - u;
    return (pi / 2.0) * sinc(pi * u / 2.0) / other;
}

double surface_area_sphere(int dim)
{
    // |S^{dim-1}| = 2 pi^{dim/2} / Gamma(dim/2)
    return 2.0 * std::pow(pi, 0.5 * dim) / quad::gamma_fn(0.5 * dim);
}

void check_set(const StarSet& set)
{
    require(set.m.size() == set.rule.theta.size(),
            "profile samples must match the angular grid");
    for (double v : set.m)
        require(v > 0.0, "profile values must be positive");
}

void check_match(const StarSet& set, const WeightParams& p)
{
    require(set.dim() == p.dim, "star set dimension must match weight parameters");
    require(set.alpha() == p.alpha, "star set alpha must match weight parameters");
}

}  // namespace

void WeightParams::validate() const
{
    require(dim >= 2, "N must be at least 2");
    require(alpha > -1.0, "alpha must exceed -1");
    require(volume_order() > 0.0, "l+N+alpha must be positive");
}

void WeightParams::validate_for_ratio() const
{
    validate();
    require(perimeter_order() > 0.0, "k+N+alpha-1 must be positive");
}

AngularRule angular_rule(int dim, double alpha, int nodes)
{
    require(dim >= 2, "N must be at least 2");
    require(alpha > -1.0, "alpha must exceed -1");
    require(nodes >= 16, "angular grid needs at least 16 nodes");

    AngularRule rule;
    rule.dim = dim;
    rule.alpha = alpha;
    rule.theta.resize(nodes);
    rule.weight.resize(nodes);

    if (dim == 2) {
        // theta = (pi/2) t;  cos^alpha(theta) = [(1-t)(1+t)]^alpha fold^alpha.
        const quad::Rule gj = quad::gauss_jacobi(nodes, alpha, alpha);
        for (int i = 0; i < nodes; ++i) {
            const double t = gj.nodes[i];
            rule.theta[i] = 0.5 * pi * t;
            rule.weight[i] = 0.5 * pi * gj.weights[i] * std::pow(planar_fold(t), alpha);
        }
        return rule;
    }

    // theta = (pi/4)(1+t); surface element sin^{N-2}(theta) |S^{N-2}| dtheta.
    // sin(theta) = (1+t) psi1, cos(theta) = (1-t) psi2 with analytic psi's.
    const quad::Rule gj = quad::gauss_jacobi(nodes, alpha, static_cast<double>(dim - 2));
    const double surf = surface_area_sphere(dim - 1);
    for (int i = 0; i < nodes; ++i) {
        const double t = gj.nodes[i];
        const double psi1 = (pi / 4.0) * sinc(pi * (1.0 + t) / 4.0);
        const double psi2 = (pi / 4.0) * sinc(pi * (1.0 - t) / 4.0);
        rule.theta[i] = 0.25 * pi * (1.0 + t);
        rule.weight[i] = 0.25 * pi * surf * gj.weights[i] *
                         std::pow(psi1, static_cast<double>(dim - 2)) *
                         std::pow(psi2, alpha);
    }
    return rule;
}

StarSet make_star_set(int dim, double alpha, int nodes,
                      const std::function<double(double)>& profile)
{
    StarSet set;
    set.rule = angular_rule(dim, alpha, nodes);
    set.m.resize(set.rule.theta.size());
    for (std::size_t i = 0; i < set.m.size(); ++i)
        set.m[i] = profile(set.rule.theta[i]);
    check_set(set);
    return set;
}

StarSet make_halfball(int dim, double alpha, int nodes, double r)
{
    require(r > 0.0, "radius must be positive");
    return make_star_set(dim, alpha, nodes, [r](double) { return r; });
}

std::vector<double> profile_derivative(const StarSet& set)
{
    check_set(set);
    return detail::derivative_on_grid(set.rule.theta, set.m);
}

double weighted_volume(const StarSet& set, double exponent)
{
    check_set(set);
    const double order = exponent + set.dim() + set.alpha();
    require(order > 0.0, "exponent+N+alpha must be positive");
    double sum = 0.0;
    for (std::size_t i = 0; i < set.m.size(); ++i)
        sum += set.rule.weight[i] * std::pow(set.m[i], order);
    return sum / order;
}

double weighted_perimeter(const StarSet& set, double exponent)
{
    check_set(set);
    const double order = exponent + set.dim() + set.alpha();
    const std::vector<double> dm = profile_derivative(set);
    double sum = 0.0;
    for (std::size_t i = 0; i < set.m.size(); ++i) {
        const double m = set.m[i];
        sum += set.rule.weight[i] * std::pow(m, order - 2.0) *
               std::sqrt(m * m + dm[i] * dm[i]);
    }
    return sum;
}

double crad(const WeightParams& p)
{
    p.validate_for_ratio();
    const double vo = p.volume_order();
    return std::pow(vo, p.ratio_exponent()) *
           std::pow(quad::kappa(p.dim, p.alpha), (p.l - p.k + 1.0) / vo);
}

double rayleigh_ratio(const StarSet& set, const WeightParams& p)
{
    p.validate_for_ratio();
    check_match(set, p);
    return weighted_perimeter(set, p.k) /
           std::pow(weighted_volume(set, p.l), p.ratio_exponent());
}

double halfball_weighted_volume(double r, double exponent, int dim, double alpha)
{
    require(r > 0.0, "radius must be positive");
    const double order = exponent + dim + alpha;
    require(order > 0.0, "exponent+N+alpha must be positive");
    return std::pow(r, order) * quad::kappa(dim, alpha) / order;
}

double halfball_weighted_perimeter(double r, double exponent, int dim, double alpha)
{
    require(r > 0.0, "radius must be positive");
    return std::pow(r, exponent + dim + alpha - 1.0) * quad::kappa(dim, alpha);
}

Interval translated_ball_ratio(const BallSpec& ball, const WeightParams& p)
{
    p.validate_for_ratio();
    require(ball.radius > 0.0, "radius must be positive");
    require(ball.center_offset > ball.radius + 1.0,
            "center_offset must exceed radius + 1");

    // Translation along e_1 leaves x_N untouched, so the alpha-only perimeter
    // and volume are those of the half-ball of the same radius.
    const double p0 = halfball_weighted_perimeter(ball.radius, 0.0, p.dim, p.alpha);
    const double v0 = halfball_weighted_volume(ball.radius, 0.0, p.dim, p.alpha);

    const double near = ball.center_offset - ball.radius;
    const double far = ball.center_offset + ball.radius;
    const double k_lo = std::min(std::pow(near, p.k), std::pow(far, p.k));
    const double k_hi = std::max(std::pow(near, p.k), std::pow(far, p.k));
    const double l_lo = std::min(std::pow(near, p.l), std::pow(far, p.l));
    const double l_hi = std::max(std::pow(near, p.l), std::pow(far, p.l));

    const double e = p.ratio_exponent();
    Interval out;
    out.lower = k_lo * p0 / std::pow(l_hi * v0, e);
    out.upper = k_hi * p0 / std::pow(l_lo * v0, e);
    return out;
}

double horiuchi_map(double r, const WeightParams& p)
{
    p.validate_for_ratio();
    require(r >= 0.0, "radius must be non-negative");
    // x |x|^{k/(N+alpha-1)} is 0 * infinity at the origin when k < 0.
    require(r > 0.0 || p.k >= 0.0, "origin is excluded for k < 0");
    return std::pow(r, p.perimeter_order() / (p.dim + p.alpha - 1.0));
}

double horiuchi_exponent(const WeightParams& p)
{
    p.validate_for_ratio();
    const double s = p.dim + p.alpha - 1.0;
    return (p.l * s - p.k * (s + 1.0)) / p.perimeter_order();
}

double measure_ratio(const StarSet& set, double l, double l_prime)
{
    check_set(set);
    require(l > l_prime, "l must exceed l_prime");
    require(l_prime + set.dim() + set.alpha() > 0.0, "l_prime+N+alpha must be positive");
    const double num = weighted_volume(set, l);
    const double den = weighted_volume(set, l_prime);
    return std::pow(num, 1.0 / (l + set.dim() + set.alpha())) /
           std::pow(den, 1.0 / (l_prime + set.dim() + set.alpha()));
}

}  // namespace isoperim::geometry
