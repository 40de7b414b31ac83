#pragma once

#include <functional>
#include <vector>

#include "isoperim/regions.hpp"

namespace isoperim::orthant {

/// Monomial weight x^a = x_1^{a_1} ... x_N^{a_N} on the open positive
/// orthant.  Every exponent must be strictly positive (the pure half-space
/// weight x_N^alpha belongs to the geometry/regions modules); the number of
/// exponents fixes the ambient dimension.
struct MonomialWeight {
    std::vector<double> exponents;

    int dim() const { return static_cast<int>(exponents.size()); }
    double total() const;  ///< |a| = a_1 + ... + a_N

    /// Throws domain_error unless there are at least two exponents and each
    /// one is finite and strictly positive.
    void validate() const;
};

/// kappa_a = integral over S^{N-1} cap {x_i > 0 for all i} of x^a dH.
/// In angular coordinates the integrand factorises, so the tensor-product
/// quadrature reduces to one adaptive Gauss-Jacobi factor per colatitude;
/// each factor refines until converged and throws convergence_error if it
/// never settles.  Requires a.dim() == dim >= 2.
double orthant_kappa(int dim, const MonomialWeight& a);

/// Sharp constant of the weighted isoperimetric inequality on the orthant
/// with perimeter density |x|^k x^a and volume density |x|^l x^a:
/// D = (l+N+|a|)^{(k+N+|a|-1)/(l+N+|a|)} * kappa_a^{(l-k+1)/(l+N+|a|)}.
/// Requires l+N+|a| > 0 and k+N+|a|-1 > 0.  D is what the orthant ball
/// B_R cap O_+ realises for every radius R (the ratio is dilation
/// invariant), so it does not depend on R.
double orthant_constant(double k, double l, int dim, const MonomialWeight& a);

/// Region classification for the orthant problem.  The half-space analysis
/// carries over verbatim with alpha replaced by |a|, so this delegates to
/// regions::classify at alpha = |a| -- thresholds, precedence and boundary
/// conventions included.
regions::Verdict orthant_classify(double k, double l, int dim,
                                  const MonomialWeight& a);

/// Angular quadrature for the first-orthant patch of S^{N-1}:
/// sum_i weight[i] * F(node i) approximates the surface integral of F
/// against x^a dH.  Planar rules (N = 2) grid the polar angle theta,
/// measured from the x_1-axis, on (0, pi/2); spatial rules (N = 3) grid the
/// colatitude phi (from the x_3-axis) and the azimuth theta on (0, pi/2)^2,
/// node (i, j) stored at index i * theta.size() + j.
struct OrthantRule {
    MonomialWeight a;
    std::vector<double> phi;  ///< empty when N = 2
    std::vector<double> theta;
    std::vector<double> weight;

    int dim() const { return a.dim(); }
};

/// Fresh tensor rule; nodes >= 16 is the per-direction grid size.
OrthantRule orthant_rule(int dim, const MonomialWeight& a, int nodes);

/// Star-shaped set {r w : w in the orthant patch, 0 < r < m(w)} given by a
/// radial graph sampled on a tensor rule; the profile must be positive
/// everywhere.  Only the graph carries weighted perimeter: the lateral
/// faces sit on coordinate hyperplanes where the relative perimeter in the
/// open orthant does not count them.
struct OrthantSet {
    OrthantRule rule;
    std::vector<double> m;

    int dim() const { return rule.dim(); }
};

/// Planar set from a profile m(theta); requires a.dim() == 2.
OrthantSet make_sector_set(const MonomialWeight& a, int nodes,
                           const std::function<double(double)>& profile);

/// Spatial set from a profile m(phi, theta); requires a.dim() == 3.
OrthantSet make_octant_set(const MonomialWeight& a, int nodes,
                           const std::function<double(double, double)>& profile);

/// The orthant ball of radius r as a star set (N = 2 or 3).
OrthantSet make_orthant_ball(const MonomialWeight& a, int nodes, double r = 1.0);

/// integral over the set of |x|^exponent x^a dx
/// = (e+N+|a|)^{-1} * integral of m^{e+N+|a|} x^a dTheta.
double weighted_volume(const OrthantSet& set, double exponent);

/// integral over the radial graph {r = m(w)} of |x|^exponent x^a dH
/// = integral of m^{e+N+|a|-2} sqrt(m^2 + |grad m|^2) x^a dTheta.
double weighted_perimeter(const OrthantSet& set, double exponent);

/// P_k(set) / V_l(set)^{(k+N+|a|-1)/(l+N+|a|)}; bounded below by
/// orthant_constant whenever a sufficient case certifies the orthant ball.
double rayleigh_ratio(const OrthantSet& set, double k, double l);

}  // namespace isoperim::orthant
