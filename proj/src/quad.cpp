#include "isoperim/quad.hpp"

#include <cmath>
#include <limits>

#include "isoperim/errors.hpp"

namespace isoperim::quad {

using detail::require;

namespace {

constexpr double pi = 3.14159265358979323846;

// Lanczos coefficients for g = 607/128, n = 15 (Godfrey's set); relative
// error of the rational part is a few ulps over the right half-plane.
constexpr double lanczos_g = 607.0 / 128.0;
constexpr double lanczos_c[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// Implicit-shift QL on a symmetric tridiagonal matrix (diagonal d, subdiagonal
// e), accumulating the applied rotations into the vector z.  On return d holds
// the eigenvalues in ascending order and z the correspondingly permuted,
// rotated input vector.  This is the classical kernel used to turn orthogonal
// polynomial recurrences into quadrature rules: with z = e_1 the rule weights
// are mu0 * z_i^2.
void imtqlx(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z)
{
    const int n = static_cast<int>(d.size());
    if (n == 1)
        return;
    const double prec = std::numeric_limits<double>::epsilon();
    const int max_iter = 40;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        for (;;) {
            int m = l;
            while (m < n - 1) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= prec * dd)
                    break;
                ++m;
            }
            if (m == l)
                break;
            if (++iter > max_iter)
                throw convergence_error("tridiagonal QL iteration failed to converge");

            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0;
            double c = 1.0;
            double p = 0.0;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    // Deflate: the subdiagonal underflowed mid-sweep.
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    p = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    // Insertion sort into ascending order, carrying z along.
    for (int i = 1; i < n; ++i) {
        const double dv = d[i];
        const double zv = z[i];
        int j = i - 1;
        while (j >= 0 && d[j] > dv) {
            d[j + 1] = d[j];
            z[j + 1] = z[j];
            --j;
        }
        d[j + 1] = dv;
        z[j + 1] = zv;
    }
}

}  // namespace

double gamma_fn(double x)
{
    require(!(x <= 0.0 && x == std::floor(x)), "x must not be a non-positive integer");
    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
        return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
    }
    const double z = x - 1.0;
    double series = lanczos_c[0];
    for (int i = 1; i < 15; ++i)
        series += lanczos_c[i] / (z + i);
    const double t = z + lanczos_g + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

double beta_fn(double x, double y)
{
    require(x > 0.0, "beta_fn arguments must be positive");
    require(y > 0.0, "beta_fn arguments must be positive");
    return gamma_fn(x) * gamma_fn(y) / gamma_fn(x + y);
}

double kappa(int dim, double alpha)
{
    require(dim >= 2, "dimension must be at least 2");
    require(alpha > -1.0, "alpha must exceed -1");
    const double h = 0.5 * (dim - 1);
    return beta_fn(h, 0.5 * (alpha + 1.0)) * std::pow(pi, h) / gamma_fn(h);
}

Rule gauss_jacobi(int n, double a, double b)
{
    require(n >= 1, "rule size must be at least 1");
    require(a > -1.0 && b > -1.0, "endpoint exponents must exceed -1");

    const double ab = a + b;
    std::vector<double> d(n);
    std::vector<double> e(n, 0.0);
    std::vector<double> z(n, 0.0);

    // Monic three-term recurrence coefficients of the Jacobi polynomials for
    // the weight (1-t)^a (1+t)^b: diagonal alpha_k, subdiagonal sqrt(beta_k).
    d[0] = (b - a) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double t = 2.0 * k + ab;
        d[k] = (b * b - a * a) / (t * (t + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        double bk;
        if (k == 1)
            bk = 4.0 * (a + 1.0) * (b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        else {
            const double t = 2.0 * k + ab;
            bk = 4.0 * k * (k + a) * (k + b) * (k + ab) / (t * t * (t + 1.0) * (t - 1.0));
        }
        e[k - 1] = std::sqrt(bk);
    }

    const double mu0 = std::pow(2.0, ab + 1.0) * beta_fn(a + 1.0, b + 1.0);
    z[0] = 1.0;
    imtqlx(d, e, z);

    Rule rule;
    rule.nodes = std::move(d);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i)
        rule.weights[i] = mu0 * z[i] * z[i];
    return rule;
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 EndpointWeight w, QuadSpec spec)
{
    require(hi > lo, "upper limit must exceed lower limit");
    require(w.left_exponent > -1.0 && w.right_exponent > -1.0,
            "endpoint exponents must exceed -1");
    require(spec.node_count >= 4, "node_count must be at least 4");
    require(spec.max_refinements >= 0, "max_refinements must be non-negative");

    const double half = 0.5 * (hi - lo);
    // (x-lo)^L (hi-x)^R picks up half^(L+R+1) under the affine map to [-1,1].
    const double scale = std::pow(half, w.left_exponent + w.right_exponent + 1.0);

    auto estimate = [&](int n) {
        const Rule rule = gauss_jacobi(n, w.right_exponent, w.left_exponent);
        double sum = 0.0;
        for (int i = 0; i < n; ++i)
            sum += rule.weights[i] * f(lo + half * (1.0 + rule.nodes[i]));
        return scale * sum;
    };

    int n = spec.node_count;
    double prev = estimate(n);
    for (int r = 0; r < spec.max_refinements; ++r) {
        n *= 2;
        const double cur = estimate(n);
        if (std::fabs(cur - prev) <= spec.target_abs_tol)
            return cur;
        prev = cur;
    }
    throw convergence_error("quadrature refinement did not reach target_abs_tol");
}

}  // namespace isoperim::quad
