#pragma once

#include <functional>
#include <vector>

namespace isoperim::quad {

/// Controls the fixed-order rule and the refinement loop of integrate().
struct QuadSpec {
    int node_count = 64;           ///< nodes of the initial rule, >= 4
    double target_abs_tol = 1e-10; ///< absolute tolerance between refinements
    int max_refinements = 8;       ///< each refinement doubles node_count
};

/// Endpoint weight (x-lo)^left_exponent * (hi-x)^right_exponent absorbed into
/// the quadrature rule; both exponents must exceed -1.
struct EndpointWeight {
    double left_exponent = 0.0;
    double right_exponent = 0.0;
};

/// Nodes and weights of a fixed quadrature rule on [-1, 1].
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Jacobi rule: sum w_i f(t_i) == integral over [-1,1] of
/// (1-t)^a (1+t)^b f(t) dt, exact for polynomials f of degree <= 2n-1.
/// Requires n >= 1 and a, b > -1.
Rule gauss_jacobi(int n, double a, double b);

/// Gamma function by Lanczos rational approximation; reflection below 1/2.
/// x must not be a non-positive integer. Relative accuracy ~1e-14 on [0.1, 50].
double gamma_fn(double x);

/// Euler beta B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y); x, y > 0.
double beta_fn(double x, double y);

/// Weighted area of the upper unit hemisphere:
/// kappa(N, alpha) = integral over S^{N-1} cap {x_N > 0} of (x_N)^alpha dH.
/// Closed form B((N-1)/2, (alpha+1)/2) pi^{(N-1)/2} / Gamma((N-1)/2).
/// Requires N >= 2 and alpha > -1.
double kappa(int dim, double alpha);

/// integral over [lo, hi] of (x-lo)^L (hi-x)^R f(x) dx with the endpoint
/// monomials absorbed by a Gauss-Jacobi rule; f itself should be smooth.
/// Refines by doubling until two consecutive estimates differ by at most
/// spec.target_abs_tol; throws convergence_error past max_refinements.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 EndpointWeight w = {}, QuadSpec spec = {});

}  // namespace isoperim::quad
