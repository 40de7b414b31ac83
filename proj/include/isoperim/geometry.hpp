#pragma once

#include <functional>
#include <vector>

#include "isoperim/quad.hpp"

namespace isoperim::geometry {

/// Weight parameters on the upper half-space {x_N > 0}: perimeter density
/// |x|^k (x_N)^alpha, volume density |x|^l (x_N)^alpha.
struct WeightParams {
    double k = 0.0;
    double l = 0.0;
    int dim = 2;         ///< ambient dimension N >= 2
    double alpha = 0.0;  ///< > -1

    double perimeter_order() const { return k + dim + alpha - 1.0; }
    double volume_order() const { return l + dim + alpha; }
    /// Exponent making P / V^e scale invariant.
    double ratio_exponent() const { return perimeter_order() / volume_order(); }

    /// Throws domain_error unless N >= 2, alpha > -1, l+N+alpha > 0.
    void validate() const;
    /// validate() plus k+N+alpha-1 > 0 (needed whenever a ratio is formed).
    void validate_for_ratio() const;
};

/// Angular quadrature for integrals over the upper unit hemisphere against
/// h dTheta with h = cos^alpha(theta_1): sum_i weight[i] * F(theta[i])
/// approximates (to rule accuracy) the surface integral of an axisymmetric F.
/// Planar (N = 2) grids use the signed angle from the x_2-axis on
/// (-pi/2, pi/2); axisymmetric grids (N >= 3) the colatitude on (0, pi/2)
/// with the factor sin^{N-2}(theta_1) |S^{N-2}| absorbed into the weights.
struct AngularRule {
    int dim = 2;
    double alpha = 0.0;
    std::vector<double> theta;
    std::vector<double> weight;
};

AngularRule angular_rule(int dim, double alpha, int nodes);

/// Star-shaped set {x = r w : w in hemisphere, 0 < r < m(theta_1(w))} sampled
/// on an angular rule; the profile m must be positive everywhere.
struct StarSet {
    AngularRule rule;
    std::vector<double> m;

    int dim() const { return rule.dim; }
    double alpha() const { return rule.alpha; }
};

/// Samples a profile on a fresh angular rule; nodes >= 16.
StarSet make_star_set(int dim, double alpha, int nodes,
                      const std::function<double(double)>& profile);

/// The half-ball of radius r as a star set.
StarSet make_halfball(int dim, double alpha, int nodes, double r = 1.0);

/// d(m)/d(theta) on the (non-uniform) angular grid: centered second-order
/// differences in the interior, one-sided second-order at the ends.
std::vector<double> profile_derivative(const StarSet& set);

/// integral over the set of |x|^exponent (x_N)^alpha dx
/// = (e+N+alpha)^{-1} * integral of m^{e+N+alpha} h dTheta.
double weighted_volume(const StarSet& set, double exponent);

/// integral over the radial graph boundary {r = m(theta)} of
/// |x|^exponent (x_N)^alpha dH
/// = integral of m^{e+N+alpha-2} sqrt(m^2 + |grad m|^2) h dTheta.
double weighted_perimeter(const StarSet& set, double exponent);

/// Closed-form half-ball value of the scale-invariant ratio:
/// (l+N+alpha)^{(k+N+alpha-1)/(l+N+alpha)} * kappa^{(l-k+1)/(l+N+alpha)}.
double crad(const WeightParams& p);

/// P_k(set) / V_l(set)^{(k+N+alpha-1)/(l+N+alpha)}; the set's grid must match
/// p.dim and p.alpha.
double rayleigh_ratio(const StarSet& set, const WeightParams& p);

/// Half-ball volume/perimeter of radius r, exponent e (closed forms).
double halfball_weighted_volume(double r, double exponent, int dim, double alpha);
double halfball_weighted_perimeter(double r, double exponent, int dim, double alpha);

struct Interval {
    double lower = 0.0;
    double upper = 0.0;
};

/// Ball of given radius centered at center_offset * e_1 (on the hyperplane).
struct BallSpec {
    double center_offset = 0.0;  ///< t, must exceed radius + 1
    double radius = 1.0;         ///< > 0
};

/// Rigorous enclosure of the Rayleigh ratio of B_radius(t e_1) intersected
/// with the half-space, from the radial sandwich
/// min((t-r)^a,(t+r)^a) <= |x|^a <= max((t-r)^a,(t+r)^a) applied to both the
/// perimeter (a = k) and volume (a = l) factors.
Interval translated_ball_ratio(const BallSpec& ball, const WeightParams& p);

/// Image radius under y = x |x|^{k/(N+alpha-1)}:
/// |y| = |x|^{(k+N+alpha-1)/(N+alpha-1)}.
double horiuchi_map(double r, const WeightParams& p);

/// Volume exponent seen after the change of variables:
/// l' = (l (N+alpha-1) - k (N+alpha)) / (k+N+alpha-1).
double horiuchi_exponent(const WeightParams& p);

/// V_l(set)^{1/(l+N+alpha)} / V_{l'}(set)^{1/(l'+N+alpha)}; requires
/// l > l' > -(N+alpha). Half-balls give the minimum among star sets.
double measure_ratio(const StarSet& set, double l, double l_prime);

}  // namespace isoperim::geometry
