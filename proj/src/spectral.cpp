#include "isoperim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isoperim/detail/fd.hpp"
#include "isoperim/errors.hpp"
#include "isoperim/quad.hpp"

namespace isoperim::spectral {

using detail::require;

namespace {

constexpr double pi = 3.14159265358979323846;

double sinc(double s)
{
    if (std::fabs(s) < 1e-4) {
        const double s2 = s * s;
        return 1.0 - s2 / 6.0 * (1.0 - s2 / 20.0);
    }
    return std::sin(s) / s;
}

// Generalized tridiagonal pencil A v = lambda B v with B diagonal:
// A has row sums diag/off, B the cell masses.
struct Pencil {
    std::vector<double> centers;
    std::vector<double> diag;
    std::vector<double> off;   // off[j] couples cells j and j+1
    std::vector<double> mass;
};

// Quadrature of g over [lo, hi] with a fixed 32-node Gauss-Legendre rule;
// used for the per-cell and per-face coefficient integrals, whose integrands
// are analytic on the closed subinterval.
double cell_integral(const quad::Rule& gl, double lo, double hi,
                     const std::function<double(double)>& g)
{
    const double half = 0.5 * (hi - lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i)
        sum += gl.weights[i] * g(lo + half * (1.0 + gl.nodes[i]));
    return half * sum;
}

// Finite-volume pencil for -(w v')' = lambda w v on (-pi/2, pi/2) with
// w = cos^alpha, natural boundary conditions.  Cell-centered grid; masses are
// exact cell integrals (endpoint cells absorb the (pi/2 -+ t)^alpha factor
// into a Gauss-Jacobi rule), fluxes use exact resistivity integrals between
// adjacent cell centers.
Pencil assemble_wirtinger(double alpha, int n)
{
    const double h = pi / n;
    const double lo = -0.5 * pi;
    const quad::Rule gl = quad::gauss_jacobi(32, 0.0, 0.0);

    Pencil p;
    p.centers.resize(n);
    p.mass.resize(n);
    for (int j = 0; j < n; ++j)
        p.centers[j] = lo + (j + 0.5) * h;

    quad::QuadSpec cell_spec;
    cell_spec.node_count = 32;
    cell_spec.target_abs_tol = 1e-14;

    p.mass[0] = quad::integrate(
        [alpha](double t) { return std::pow(sinc(t + 0.5 * pi), alpha); },
        lo, lo + h, {alpha, 0.0}, cell_spec);
    p.mass[n - 1] = quad::integrate(
        [alpha](double t) { return std::pow(sinc(0.5 * pi - t), alpha); },
        0.5 * pi - h, 0.5 * pi, {0.0, alpha}, cell_spec);
    for (int j = 1; j < n - 1; ++j)
        p.mass[j] = cell_integral(gl, lo + j * h, lo + (j + 1) * h,
                                  [alpha](double t) { return std::pow(std::cos(t), alpha); });

    p.off.assign(n - 1, 0.0);
    p.diag.assign(n, 0.0);
    for (int j = 0; j + 1 < n; ++j) {
        const double resist =
            cell_integral(gl, p.centers[j], p.centers[j + 1],
                          [alpha](double t) { return std::pow(std::cos(t), -alpha); });
        const double flux = 1.0 / resist;
        p.off[j] = -flux;
        p.diag[j] += flux;
        p.diag[j + 1] += flux;
    }
    return p;
}

// First-azimuthal-harmonic pencil on (0, pi/2) for N >= 3:
// -(w f')' + (N-2) w / sin^2 * f = lambda w f, w = sin^{N-2} cos^alpha.
// The zeroth-order term uses the cell-center value times the exact cell mass.
Pencil assemble_azimuthal(int dim, double alpha, int n)
{
    const double h = 0.5 * pi / n;
    const double nu = static_cast<double>(dim - 2);
    const quad::Rule gl = quad::gauss_jacobi(32, 0.0, 0.0);

    Pencil p;
    p.centers.resize(n);
    p.mass.resize(n);
    for (int j = 0; j < n; ++j)
        p.centers[j] = (j + 0.5) * h;

    quad::QuadSpec cell_spec;
    cell_spec.node_count = 32;
    cell_spec.target_abs_tol = 1e-14;

    p.mass[0] = quad::integrate(
        [nu, alpha](double t) {
            return std::pow(sinc(t), nu) * std::pow(std::cos(t), alpha);
        },
        0.0, h, {nu, 0.0}, cell_spec);
    p.mass[n - 1] = quad::integrate(
        [nu, alpha](double t) {
            return std::pow(std::sin(t), nu) * std::pow(sinc(0.5 * pi - t), alpha);
        },
        0.5 * pi - h, 0.5 * pi, {0.0, alpha}, cell_spec);
    for (int j = 1; j < n - 1; ++j)
        p.mass[j] = cell_integral(gl, j * h, (j + 1) * h, [nu, alpha](double t) {
            return std::pow(std::sin(t), nu) * std::pow(std::cos(t), alpha);
        });

    p.off.assign(n - 1, 0.0);
    p.diag.assign(n, 0.0);
    for (int j = 0; j + 1 < n; ++j) {
        const double resist =
            cell_integral(gl, p.centers[j], p.centers[j + 1], [nu, alpha](double t) {
                return std::pow(std::sin(t), -nu) * std::pow(std::cos(t), -alpha);
            });
        const double flux = 1.0 / resist;
        p.off[j] = -flux;
        p.diag[j] += flux;
        p.diag[j + 1] += flux;
    }
    for (int j = 0; j < n; ++j) {
        const double s = std::sin(p.centers[j]);
        p.diag[j] += nu / (s * s) * p.mass[j];
    }
    return p;
}

// Number of eigenvalues of the symmetric tridiagonal (diag, off) below x,
// by the Sturm sign count of the shifted LDL^T pivots.
int count_below(const std::vector<double>& diag, const std::vector<double>& off, double x)
{
    const int n = static_cast<int>(diag.size());
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    double d = diag[0] - x;
    int cnt = d < 0.0 ? 1 : 0;
    for (int i = 1; i < n; ++i) {
        if (std::fabs(d) < tiny)
            d = (d < 0.0) ? -tiny : tiny;
        d = diag[i] - x - off[i - 1] * off[i - 1] / d;
        if (d < 0.0)
            ++cnt;
    }
    return cnt;
}

// k-th (0-based, ascending) eigenvalue by bisection on the Gershgorin interval.
double bisect_eigenvalue(const std::vector<double>& diag, const std::vector<double>& off, int k)
{
    const int n = static_cast<int>(diag.size());
    double lo = diag[0], hi = diag[0];
    for (int i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::fabs(off[i - 1]) : 0.0) +
                         (i + 1 < n ? std::fabs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    const double eps = std::numeric_limits<double>::epsilon();
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (count_below(diag, off, mid) >= k + 1)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= 4.0 * eps * std::max({1.0, std::fabs(lo), std::fabs(hi)}))
            break;
    }
    return 0.5 * (lo + hi);
}

// Solve T x = b for tridiagonal T (sub, diag, sup) by LU with partial
// pivoting; row swaps introduce a second superdiagonal.
std::vector<double> tridiag_solve_pivot(std::vector<double> sub, std::vector<double> diag,
                                        std::vector<double> sup, std::vector<double> b)
{
    const int n = static_cast<int>(diag.size());
    std::vector<double> sup2(n, 0.0);
    for (int i = 0; i + 1 < n; ++i) {
        if (std::fabs(sub[i]) > std::fabs(diag[i])) {
            std::swap(diag[i], sub[i]);
            std::swap(sup[i], diag[i + 1]);
            if (i + 2 < n) {
                sup2[i] = sup[i + 1];
                sup[i + 1] = 0.0;
            }
            std::swap(b[i], b[i + 1]);
        }
        const double f = sub[i] / diag[i];
        diag[i + 1] -= f * sup[i];
        if (i + 2 < n)
            sup[i + 1] -= f * sup2[i];
        b[i + 1] -= f * b[i];
    }
    std::vector<double> x(n);
    for (int i = n - 1; i >= 0; --i) {
        double v = b[i];
        if (i + 1 < n)
            v -= sup[i] * x[i + 1];
        if (i + 2 < n)
            v -= sup2[i] * x[i + 2];
        x[i] = v / diag[i];
    }
    return x;
}

EigenResult solve_pencil(const Pencil& p, int index)
{
    const int n = static_cast<int>(p.diag.size());

    // Standard form C = B^{-1/2} A B^{-1/2}.
    std::vector<double> cdiag(n), coff(n - 1);
    for (int i = 0; i < n; ++i)
        cdiag[i] = p.diag[i] / p.mass[i];
    for (int i = 0; i + 1 < n; ++i)
        coff[i] = p.off[i] / std::sqrt(p.mass[i] * p.mass[i + 1]);

    const double lambda = bisect_eigenvalue(cdiag, coff, index);

    // Inverse iteration on the pencil with a slightly offset shift.
    const double shift = lambda + std::max(std::fabs(lambda), 1.0) * 1e-10;
    std::vector<double> sub(n - 1), diag(n), sup(n - 1);
    for (int i = 0; i < n; ++i)
        diag[i] = p.diag[i] - shift * p.mass[i];
    for (int i = 0; i + 1 < n; ++i)
        sub[i] = sup[i] = p.off[i];

    const double bnorm_const = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            s += p.mass[i];
        return std::sqrt(s);
    }();

    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = std::sin(p.centers[i]);

    auto b_normalize = [&](std::vector<double>& y) {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            s += p.mass[i] * y[i] * y[i];
        const double norm = std::sqrt(s);
        for (double& e : y)
            e /= norm;
    };
    auto deflate_constant = [&](std::vector<double>& y) {
        double inner = 0.0;
        for (int i = 0; i < n; ++i)
            inner += p.mass[i] * y[i];
        inner /= bnorm_const;
        for (int i = 0; i < n; ++i)
            y[i] -= inner / bnorm_const;
    };

    if (index > 0)
        deflate_constant(v);
    b_normalize(v);
    for (int it = 0; it < 3; ++it) {
        std::vector<double> rhs(n);
        for (int i = 0; i < n; ++i)
            rhs[i] = p.mass[i] * v[i];
        v = tridiag_solve_pivot(sub, diag, sup, rhs);
        if (index > 0)
            deflate_constant(v);
        b_normalize(v);
    }
    if (v[n - 1] < 0.0)
        for (double& e : v)
            e = -e;

    // Rayleigh quotient and residual in the generalized form.
    std::vector<double> av(n, 0.0);
    for (int i = 0; i < n; ++i) {
        av[i] = p.diag[i] * v[i];
        if (i > 0)
            av[i] += p.off[i - 1] * v[i - 1];
        if (i + 1 < n)
            av[i] += p.off[i] * v[i + 1];
    }
    double num = 0.0, den = 0.0;
    for (int i = 0; i < n; ++i) {
        num += v[i] * av[i];
        den += p.mass[i] * v[i] * v[i];
    }
    const double rq = num / den;
    double res2 = 0.0, bn2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double r = av[i] - rq * p.mass[i] * v[i];
        res2 += r * r;
        const double bv = p.mass[i] * v[i];
        bn2 += bv * bv;
    }

    EigenResult out;
    out.min_eigenvalue = rq;
    out.grid = p.centers;
    out.eigenvector = std::move(v);
    out.residual = std::sqrt(res2 / bn2);
    return out;
}

}  // namespace

AngularFunction sample_angular(int dim, double alpha, int nodes,
                               const std::function<double(double)>& f)
{
    AngularFunction u;
    u.rule = geometry::angular_rule(dim, alpha, nodes);
    u.values.resize(u.rule.theta.size());
    for (std::size_t i = 0; i < u.values.size(); ++i)
        u.values[i] = f(u.rule.theta[i]);
    return u;
}

AngularFunction sample_angular(int dim, double alpha, int nodes,
                               const std::function<double(double)>& f,
                               const std::function<double(double)>& df)
{
    AngularFunction u = sample_angular(dim, alpha, nodes, f);
    u.derivative.resize(u.rule.theta.size());
    for (std::size_t i = 0; i < u.derivative.size(); ++i)
        u.derivative[i] = df(u.rule.theta[i]);
    return u;
}

double weighted_mean(const AngularFunction& u)
{
    require(u.values.size() == u.rule.theta.size(), "samples must match the grid");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        num += u.rule.weight[i] * u.values[i];
        den += u.rule.weight[i];
    }
    return num / den;
}

ConstraintCoeffs volume_constraint_coeffs(const AngularFunction& u,
                                          const geometry::WeightParams& p)
{
    p.validate();
    require(u.rule.dim == p.dim && u.rule.alpha == p.alpha,
            "angular grid must match weight parameters");
    ConstraintCoeffs c;
    c.s1 = -weighted_mean(u);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double t = u.values[i] + c.s1;
        num += u.rule.weight[i] * t * t;
        den += u.rule.weight[i];
    }
    c.s2 = -(p.l + p.dim + p.alpha - 1.0) * num / den;
    return c;
}

double second_variation(const AngularFunction& u, const geometry::WeightParams& p)
{
    p.validate_for_ratio();
    require(u.rule.dim == p.dim && u.rule.alpha == p.alpha,
            "angular grid must match weight parameters");
    const double s1 = -weighted_mean(u);
    const std::vector<double> du = u.derivative.empty()
        ? detail::derivative_on_grid(u.rule.theta, u.values)
        : u.derivative;
    double quad_term = 0.0, grad_term = 0.0;
    for (std::size_t i = 0; i < u.values.size(); ++i) {
        const double t = u.values[i] + s1;
        quad_term += u.rule.weight[i] * t * t;
        grad_term += u.rule.weight[i] * du[i] * du[i];
    }
    return p.perimeter_order() * (p.k - p.l - 1.0) * quad_term + grad_term;
}

EigenResult wirtinger_min_eig(double alpha, int grid_size)
{
    require(alpha > -1.0, "alpha must exceed -1");
    require(grid_size >= 16, "grid_size must be at least 16");
    return solve_pencil(assemble_wirtinger(alpha, grid_size), 1);
}

EigenResult poincare_min_eig(int dim, double alpha, int grid_size)
{
    require(dim >= 2, "N must be at least 2");
    require(alpha > -1.0, "alpha must exceed -1");
    require(grid_size >= 16, "grid_size must be at least 16");
    if (dim == 2)
        return wirtinger_min_eig(alpha, grid_size);
    return solve_pencil(assemble_azimuthal(dim, alpha, grid_size), 0);
}

namespace {

double poincare_extrapolated(int dim, double alpha, int grid_size)
{
    // Richardson step assuming second-order convergence.
    const double coarse = poincare_min_eig(dim, alpha, grid_size / 2).min_eigenvalue;
    const double fine = poincare_min_eig(dim, alpha, grid_size).min_eigenvalue;
    return (4.0 * fine - coarse) / 3.0;
}

}  // namespace

StabilityReport stability_verdict(const geometry::WeightParams& p, int grid_size)
{
    p.validate_for_ratio();
    StabilityReport rep;
    rep.coefficient = p.perimeter_order() * (p.l + 1.0 - p.k);
    rep.poincare_min = poincare_extrapolated(p.dim, p.alpha, grid_size);
    rep.gap = (rep.coefficient - rep.poincare_min) / std::max(1.0, std::fabs(rep.poincare_min));
    const double band = 1e-6;
    if (rep.gap > band)
        rep.verdict = Stability::unstable;
    else if (rep.gap < -band)
        rep.verdict = Stability::stable;
    else
        rep.verdict = Stability::marginal;
    return rep;
}

double halfline_stability_margin(double alpha, int grid_size)
{
    require(alpha > -1.0 && alpha < 0.0, "alpha must lie in (-1, 0)");
    return poincare_extrapolated(2, alpha, grid_size) - (1.0 + alpha);
}

const char* stability_name(Stability s)
{
    switch (s) {
    case Stability::stable: return "Stable";
    case Stability::marginal: return "Marginal";
    case Stability::unstable: return "Unstable";
    }
    return "?";
}

}  // namespace isoperim::spectral
