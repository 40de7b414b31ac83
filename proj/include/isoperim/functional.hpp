#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "isoperim/geometry.hpp"
#include "isoperim/rearrange.hpp"
#include "isoperim/regions.hpp"

namespace isoperim::functional {

/// Parameters of the Caffarelli-Kohn-Nirenberg-type quotient on the upper
/// half-space,
///   E(v) = integral |x|^{ap} |grad v|^p (x_N)^alpha dx
///          / ( integral |x|^{bq} |v|^q (x_N)^alpha dx )^{p/q},
/// where b is pinned by dilation invariance once a, p and q are chosen.
struct CknParams {
    double a = 0.0;
    double p = 2.0;
    double q = 2.0;
    int dim = 2;         ///< ambient dimension N >= 2
    double alpha = 0.0;  ///< >= 0

    /// The exponent making E dilation invariant:
    /// b = (N+alpha)(1/p - 1/q) + a - 1.
    double b() const;
    /// Critical exponent (N+alpha)p/(N+alpha-p) when p < N+alpha, else +inf.
    double p_star() const;

    /// Throws domain_error unless N >= 2, alpha >= 0, 1 <= p <= q,
    /// q <= p_star() whenever p < N+alpha, and a > 1 - (N+alpha)/p.
    void validate() const;
};

/// Exponents derived from a parameter tuple.
struct CknExponents {
    double b = 0.0;
    double p_star = 0.0;  ///< +inf when p >= N+alpha
};

/// Pure exponent arithmetic, no validation: the b forced by dilation
/// invariance and the critical exponent the q-range is measured against.
CknExponents ckn_exponents(double a, double p, double q, int dim, double alpha);

/// L1 gradient quotient of a gridded function,
///   integral (x_N)^alpha |x|^k |grad u| dx
///   / ( integral (x_N)^alpha |x|^l u^{(l+N+alpha)/(k+N+alpha-1)} dx )
///     ^{(k+N+alpha-1)/(l+N+alpha)}.
/// Smoothing a set's indicator moves the quotient arbitrarily close to the
/// set's perimeter/volume ratio, so the infimum over admissible u equals
/// the isoperimetric constant whenever k <= l+1; for k > l+1 that
/// equivalence fails and the call is rejected.  u must be non-negative, not
/// identically zero, and must vanish on the outermost radial ring: support
/// chopped off by the grid boundary carries a surface term the grid
/// derivatives cannot see.
double q_functional(const rearrange::GriddedFunction& u,
                    const geometry::WeightParams& P);

/// Sharp constant ((N-p+k+alpha)/p)^p of the weighted Hardy inequality
///   integral (x_N)^alpha |x|^k |grad u|^p dx
///   >= C integral (x_N)^alpha |x|^{k-p} |u|^p dx
/// on the half-space.  Requires p >= 1, alpha >= 0 and N-p+k+alpha > 0.
/// No admissible function attains it.
double hardy_constant(double p, double k, double alpha, int dim);

/// Rayleigh quotient of the explicit near-optimal family
/// u_eps = min(1, |x|^{-M_eps}) with M_eps = (N-p+k+alpha+eps)/p.  Both
/// integrals share the hemisphere factor and reduce to elementary radial
/// ones (the gradient side to M_eps^p/eps, the bulk side to
/// 1/(N-p+k+alpha) + 1/eps), leaving the closed form
///   Q_eps = M_eps^p / (1 + eps/(N-p+k+alpha)).
/// Along any sequence eps -> 0+ the values decrease strictly to
/// hardy_constant when p > 1 (and already sit at the constant when p = 1),
/// witnessing both sharpness and non-attainment.
double hardy_witness_ratio(double eps, double p, double k, double alpha,
                           int dim);

/// The two thresholds splitting the a-axis at fixed (p, q, N, alpha):
/// radial minimizers of E are guaranteed for a <= a2, and the certifying
/// weight pair switches regime at a1 (k <= 0 below it, k >= 0 above).
struct CknThresholds {
    double a1 = 0.0;
    double a2 = 0.0;
};

/// a1 = (N+alpha-1)/(q - q/p + 1) + 1 - (N+alpha)/p,
/// a2 = (N+alpha-1)/((q - q/p + 1) sqrt((N+alpha)(1/p - 1/q)))
///      + 1 - (N+alpha)/p.
/// Always a2 >= a1 >= 0, with equality in both exactly when p < N+alpha
/// and q = p*.  Requires the non-degenerate window 1 < p < q (and
/// q <= p* when p < N+alpha).
CknThresholds ckn_thresholds(double p, double q, int dim, double alpha);

enum class SymmetryRange {
    guaranteed_radial,  ///< a <= a2: minimizers of E may be taken radial
    not_covered,        ///< a > a2: the reduction proves nothing here
};

/// Outcome of trading (a, p, q) for an isoperimetric weight pair (k, l).
struct SymmetryReport {
    SymmetryRange range = SymmetryRange::not_covered;
    double k = 0.0;            ///< perimeter exponent of the equivalent pair
    double l = 0.0;            ///< volume exponent of the equivalent pair
    regions::Verdict verdict;  ///< classification of that pair
};

/// Maps the tuple to the weight pair
///   l = q (a + (N+alpha)/p - 1) - N - alpha,
///   k = (1 + q - q/p)(a + (N+alpha)/p - 1) - N - alpha + 1,
/// so that a = k + l(1/p - 1) and bq = l hold identically, classifies the
/// pair, and reports whether a falls inside the guaranteed-radial window
/// a <= a2.  Inside the window the classification is always a certified
/// half-ball regime: the k <= 0 sufficient condition up to a1 and the
/// k >= 0 one between a1 and a2.  Requires the same window as
/// ckn_thresholds; at p = q the quotient is the Hardy one and radial
/// optimality needs no reduction.
SymmetryReport ckn_symmetry_range(const CknParams& params);

/// The explicit radial minimizer of E for 1 < p < q,
///   U(r) = (1 + r^{(N-p+ap+alpha)(q-p)/(p(p-1))})^{p/(p-q)},
/// normalised so U(0) = 1.  The family degenerates at p = 1 and at p = q;
/// both are rejected.
double ckn_minimizer(double r, const CknParams& params);

/// A radial function prepared for the one-dimensional reduction of E: cell
/// midpoint samples of v on the unit interval plus samples of the
/// reflected tail w(s) = v(1/s) on the same partition, together with the
/// declared power rate of decay at infinity.  Reflecting the tail turns
/// both improper integrals into integrals over (0, 1); the declared rate
/// gates them analytically before any sum is formed, because a divergent
/// tail still produces a finite (and meaningless) sum at any fixed
/// resolution.
struct RadialFunction {
    std::vector<double> edges;    ///< shared partition 0 = e_0 < ... < e_n = 1
    std::vector<double> centers;  ///< cell midpoints
    std::vector<double> head;     ///< v at the midpoints
    std::vector<double> tail;     ///< v(1/s) at the same midpoints
    /// v(r) = O(r^-decay) as r -> infinity; +inf for compact support.
    double decay = std::numeric_limits<double>::infinity();
};

/// Samples v on a uniform partition of the unit interval with `cells`
/// cells (at least 8), both directly and through the reflection s = 1/r.
RadialFunction sample_radial(const std::function<double(double)>& v,
                             int cells, double decay);

/// The minimizer U sampled at the given resolution; its decay rate
/// (N-p+ap+alpha)/(p-1) is known in closed form, so the tail gate is exact.
RadialFunction sample_minimizer(const CknParams& params, int cells);

/// The radial reduction of E: the hemisphere factor kappa(N, alpha)^{1-p/q}
/// times
///   integral r^{ap+alpha+N-1} |v'|^p dr
///   * ( integral r^{bq+alpha+N-1} |v|^q dr )^{-p/q},
/// with both integrals split at r = 1 and the outer halves folded back by
/// s = 1/r.  Head cells combine grid derivatives with exact weight masses
/// (the same discretisation the gridded quotient uses, so a compactly
/// supported radial u gives q_functional = ckn_functional_radial to
/// rounding when (a, p, q) = (k, 1, (l+N+alpha)/(k+N+alpha-1))); reflected
/// cells use midpoint sums of the transformed integrand.  Throws
/// domain_error when the declared decay cannot pay for the tails and
/// convergence_error when the sums come out non-finite.
double ckn_functional_radial(const RadialFunction& v, const CknParams& params);

/// The radial ground-state value of E.  For p < q (with p > 1) this is
/// ckn_functional_radial over the sampled minimizer at the requested
/// resolution; at p = q the family degenerates and the sharp value is the
/// Hardy constant with k = ap.
double srad(const CknParams& params, int cells = 32768);

}  // namespace isoperim::functional
