#include "isoperim/orthant.hpp"

#include <cmath>

#include "isoperim/detail/fd.hpp"
#include "isoperim/errors.hpp"
#include "isoperim/quad.hpp"

namespace isoperim::orthant {

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

// integral over (0, pi/2) of sin^mu(phi) cos^nu(phi) dphi.  The endpoint
// monomials phi^mu and (pi/2 - phi)^nu are absorbed by the Gauss-Jacobi
// rule, leaving the analytic part sinc(phi)^mu sinc(pi/2 - phi)^nu.
double colatitude_factor(double mu, double nu)
{
    quad::QuadSpec spec;
    spec.target_abs_tol = 1e-13;
    return quad::integrate(
        [mu, nu](double phi) {
            return std::pow(sinc(phi), mu) * std::pow(sinc(0.5 * pi - phi), nu);
        },
        0.0, 0.5 * pi, {mu, nu}, spec);
}

void check_weight(int dim, const MonomialWeight& a)
{
    a.validate();
    require(a.dim() == dim, "weight must carry one exponent per coordinate");
}

void check_set(const OrthantSet& set)
{
    set.rule.a.validate();
    require(set.m.size() == set.rule.weight.size(),
            "profile samples must match the angular grid");
    for (double v : set.m)
        require(std::isfinite(v) && v > 0.0, "profile values must be positive");
}

struct RatioOrders {
    double volume = 0.0;     ///< l + N + |a|
    double perimeter = 0.0;  ///< k + N + |a| - 1
};

RatioOrders ratio_orders(double k, double l, int dim, const MonomialWeight& a)
{
    RatioOrders orders;
    orders.volume = l + dim + a.total();
    orders.perimeter = k + dim + a.total() - 1.0;
    require(orders.volume > 0.0, "l+N+|a| must be positive");
    require(orders.perimeter > 0.0, "k+N+|a|-1 must be positive");
    return orders;
}

}  // namespace

double MonomialWeight::total() const
{
    double sum = 0.0;
    for (double e : exponents)
        sum += e;
    return sum;
}

void MonomialWeight::validate() const
{
    require(exponents.size() >= 2, "weight needs at least two exponents");
    for (double e : exponents)
        require(std::isfinite(e) && e > 0.0,
                "every exponent must be finite and strictly positive");
}

double orthant_kappa(int dim, const MonomialWeight& a)
{
    require(dim >= 2, "N must be at least 2");
    check_weight(dim, a);

    // Peel off one colatitude at a time: with x_n = cos(phi) and the other
    // coordinates proportional to sin(phi), the surface integral splits as
    //   kappa(a_1..a_n) = [int sin^{|a|-a_n+n-2} cos^{a_n}] kappa(a_1..a_{n-1})
    // down to the single point S^0 cap {x > 0}, whose integral is 1.
    double total = a.total();
    double kappa = 1.0;
    for (int n = dim; n >= 2; --n) {
        const double a_n = a.exponents[static_cast<std::size_t>(n) - 1];
        kappa *= colatitude_factor(total - a_n + n - 2, a_n);
        total -= a_n;
    }
    return kappa;
}

double orthant_constant(double k, double l, int dim, const MonomialWeight& a)
{
    check_weight(dim, a);
    const RatioOrders orders = ratio_orders(k, l, dim, a);
    return std::pow(orders.volume, orders.perimeter / orders.volume) *
           std::pow(orthant_kappa(dim, a), (l - k + 1.0) / orders.volume);
}

regions::Verdict orthant_classify(double k, double l, int dim,
                                  const MonomialWeight& a)
{
    check_weight(dim, a);
    return regions::classify({k, l, dim, a.total()});
}

OrthantRule orthant_rule(int dim, const MonomialWeight& a, int nodes)
{
    require(dim == 2 || dim == 3, "tensor rules cover N = 2 and N = 3 only");
    check_weight(dim, a);
    require(nodes >= 16, "angular grid needs at least 16 nodes per direction");

    OrthantRule rule;
    rule.a = a;

    // theta = (pi/4)(1+t); sin(theta) = (1+t) psi1, cos(theta) = (1-t) psi2
    // with analytic psi's, so cos^{a_1} sin^{a_2} is a Jacobi weight times a
    // smooth factor.
    const double a1 = a.exponents[0];
    const double a2 = a.exponents[1];
    const quad::Rule gtheta = quad::gauss_jacobi(nodes, a1, a2);
    rule.theta.resize(static_cast<std::size_t>(nodes));
    std::vector<double> wtheta(static_cast<std::size_t>(nodes));
    for (int i = 0; i < nodes; ++i) {
        const double t = gtheta.nodes[static_cast<std::size_t>(i)];
        const double psi1 = (pi / 4.0) * sinc(pi * (1.0 + t) / 4.0);
        const double psi2 = (pi / 4.0) * sinc(pi * (1.0 - t) / 4.0);
        rule.theta[static_cast<std::size_t>(i)] = 0.25 * pi * (1.0 + t);
        wtheta[static_cast<std::size_t>(i)] =
            0.25 * pi * gtheta.weights[static_cast<std::size_t>(i)] *
            std::pow(psi2, a1) * std::pow(psi1, a2);
    }
    if (dim == 2) {
        rule.weight = wtheta;
        return rule;
    }

    // phi = (pi/4)(1+u); the surface element sin(phi) dphi dtheta joins the
    // weight sin^{a_1+a_2}(phi) cos^{a_3}(phi) from x^a.
    const double a3 = a.exponents[2];
    const double mu = a1 + a2 + 1.0;
    const quad::Rule gphi = quad::gauss_jacobi(nodes, a3, mu);
    rule.phi.resize(static_cast<std::size_t>(nodes));
    std::vector<double> wphi(static_cast<std::size_t>(nodes));
    for (int i = 0; i < nodes; ++i) {
        const double u = gphi.nodes[static_cast<std::size_t>(i)];
        const double psi1 = (pi / 4.0) * sinc(pi * (1.0 + u) / 4.0);
        const double psi2 = (pi / 4.0) * sinc(pi * (1.0 - u) / 4.0);
        rule.phi[static_cast<std::size_t>(i)] = 0.25 * pi * (1.0 + u);
        wphi[static_cast<std::size_t>(i)] =
            0.25 * pi * gphi.weights[static_cast<std::size_t>(i)] *
            std::pow(psi1, mu) * std::pow(psi2, a3);
    }

    rule.weight.resize(static_cast<std::size_t>(nodes) * static_cast<std::size_t>(nodes));
    for (int i = 0; i < nodes; ++i)
        for (int j = 0; j < nodes; ++j)
            rule.weight[static_cast<std::size_t>(i * nodes + j)] =
                wphi[static_cast<std::size_t>(i)] * wtheta[static_cast<std::size_t>(j)];
    return rule;
}

OrthantSet make_sector_set(const MonomialWeight& a, int nodes,
                           const std::function<double(double)>& profile)
{
    OrthantSet set;
    set.rule = orthant_rule(2, a, nodes);
    set.m.resize(set.rule.theta.size());
    for (std::size_t j = 0; j < set.m.size(); ++j)
        set.m[j] = profile(set.rule.theta[j]);
    check_set(set);
    return set;
}

OrthantSet make_octant_set(const MonomialWeight& a, int nodes,
                           const std::function<double(double, double)>& profile)
{
    OrthantSet set;
    set.rule = orthant_rule(3, a, nodes);
    const std::size_t nphi = set.rule.phi.size();
    const std::size_t ntheta = set.rule.theta.size();
    set.m.resize(nphi * ntheta);
    for (std::size_t i = 0; i < nphi; ++i)
        for (std::size_t j = 0; j < ntheta; ++j)
            set.m[i * ntheta + j] = profile(set.rule.phi[i], set.rule.theta[j]);
    check_set(set);
    return set;
}

OrthantSet make_orthant_ball(const MonomialWeight& a, int nodes, double r)
{
    require(std::isfinite(r) && r > 0.0, "radius must be positive");
    if (a.dim() == 3)
        return make_octant_set(a, nodes, [r](double, double) { return r; });
    return make_sector_set(a, nodes, [r](double) { return r; });
}

double weighted_volume(const OrthantSet& set, double exponent)
{
    check_set(set);
    const double order = exponent + set.dim() + set.rule.a.total();
    require(order > 0.0, "exponent+N+|a| must be positive");
    double sum = 0.0;
    for (std::size_t i = 0; i < set.m.size(); ++i)
        sum += set.rule.weight[i] * std::pow(set.m[i], order);
    return sum / order;
}

double weighted_perimeter(const OrthantSet& set, double exponent)
{
    check_set(set);
    const double order = exponent + set.dim() + set.rule.a.total();

    if (set.dim() == 2) {
        const std::vector<double> dm =
            detail::derivative_on_grid(set.rule.theta, set.m);
        double sum = 0.0;
        for (std::size_t j = 0; j < set.m.size(); ++j) {
            const double m = set.m[j];
            sum += set.rule.weight[j] * std::pow(m, order - 2.0) *
                   std::sqrt(m * m + dm[j] * dm[j]);
        }
        return sum;
    }

    // Spherical graph r = m(phi, theta): the tangential gradient squared is
    // m_phi^2 + (m_theta / sin(phi))^2, with each slope taken on its own
    // (non-uniform) Gauss-Jacobi grid.
    const std::size_t nphi = set.rule.phi.size();
    const std::size_t ntheta = set.rule.theta.size();

    std::vector<double> dphi(set.m.size());
    std::vector<double> column(nphi);
    for (std::size_t j = 0; j < ntheta; ++j) {
        for (std::size_t i = 0; i < nphi; ++i)
            column[i] = set.m[i * ntheta + j];
        const std::vector<double> d = detail::derivative_on_grid(set.rule.phi, column);
        for (std::size_t i = 0; i < nphi; ++i)
            dphi[i * ntheta + j] = d[i];
    }

    std::vector<double> dtheta(set.m.size());
    std::vector<double> row(ntheta);
    for (std::size_t i = 0; i < nphi; ++i) {
        for (std::size_t j = 0; j < ntheta; ++j)
            row[j] = set.m[i * ntheta + j];
        const std::vector<double> d = detail::derivative_on_grid(set.rule.theta, row);
        for (std::size_t j = 0; j < ntheta; ++j)
            dtheta[i * ntheta + j] = d[j];
    }

    double sum = 0.0;
    for (std::size_t i = 0; i < nphi; ++i) {
        const double s = std::sin(set.rule.phi[i]);
        for (std::size_t j = 0; j < ntheta; ++j) {
            const std::size_t idx = i * ntheta + j;
            const double m = set.m[idx];
            const double azimuthal = dtheta[idx] / s;
            sum += set.rule.weight[idx] * std::pow(m, order - 2.0) *
                   std::sqrt(m * m + dphi[idx] * dphi[idx] + azimuthal * azimuthal);
        }
    }
    return sum;
}

double rayleigh_ratio(const OrthantSet& set, double k, double l)
{
    check_set(set);
    const RatioOrders orders = ratio_orders(k, l, set.dim(), set.rule.a);
    return weighted_perimeter(set, k) /
           std::pow(weighted_volume(set, l), orders.perimeter / orders.volume);
}

}  // namespace isoperim::orthant
