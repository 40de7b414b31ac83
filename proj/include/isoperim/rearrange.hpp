#pragma once

#include <functional>
#include <vector>

#include "isoperim/geometry.hpp"

namespace isoperim::rearrange {

/// Non-negative function on the upper half-space sampled on a polar product
/// grid, interpreted as piecewise constant on the grid cells
/// [r_edges[i], r_edges[i+1]) x [theta_edges[j], theta_edges[j+1]).  Cell
/// masses against the angular weight h dTheta are precomputed exactly, so
/// level-set measures (and hence rearrangements) are exact on the grid.
struct GriddedFunction {
    int dim = 2;
    double alpha = 0.0;
    std::vector<double> r_edges;      ///< 0 = e_0 < e_1 < ... < e_nr
    std::vector<double> r_centers;    ///< cell midpoints, size nr
    std::vector<double> theta_edges;  ///< partition of the angular domain
    std::vector<double> theta_centers;
    std::vector<double> theta_mass;   ///< exact integral of h dTheta per cell
    std::vector<std::vector<double>> values;  ///< [radial][angular], >= 0
};

/// Samples f(r, theta) at cell centers on a uniform polar grid covering
/// radii (0, r_max); negative samples are rejected.
GriddedFunction make_gridded(int dim, double alpha, int radial_cells,
                             int angular_cells, double r_max,
                             const std::function<double(double, double)>& f);

/// Radial non-increasing step function: value values[s] on the shell
/// [edges[s-1], edges[s]) with edges[-1] = 0, zero beyond the last edge.
struct RadialProfile {
    std::vector<double> edges;   ///< increasing positive shell boundaries
    std::vector<double> values;  ///< strictly decreasing positive step values
};

/// Staircase evaluation (right-continuous at the jumps).
double profile_value(const RadialProfile& s, double r);

/// Non-negative function given along hemisphere rays, piecewise constant in
/// z on per-ray cells [z_edges[i], z_edges[i+1]) and zero outside; the
/// angular rule fixes the ray directions and their h dTheta weights.
struct RayFunction {
    geometry::AngularRule rule;
    std::vector<std::vector<double>> z_edges;  ///< per ray, increasing, >= 0
    std::vector<std::vector<double>> values;   ///< per ray, size edges-1
};

/// Samples f(z, theta) on a shared z partition of (0, z_max).
RayFunction make_ray_function(int dim, double alpha, int rays, int z_cells,
                              double z_max,
                              const std::function<double(double, double)>& f);

/// Radius R with mu_{l,alpha}(B_R^+) = measure.
double radius_for_measure(double measure, const geometry::WeightParams& p);

/// Radius of the half-ball with the same mu_{l,alpha} measure as the set.
double set_symmetrize(const geometry::StarSet& set, const geometry::WeightParams& p);

/// mu_{l,alpha} measure of the super-level set {u > t} (exact on cells).
double measure_above(const GriddedFunction& u, double t,
                     const geometry::WeightParams& p);

/// Same for a radial step profile, via the closed-form shell measures.
double measure_above(const RadialProfile& s, double t,
                     const geometry::WeightParams& p);

/// Weighted Schwarz symmetrization: the radial non-increasing step function
/// equimeasurable with u for mu_{l,alpha}.
RadialProfile schwarz_symmetrize(const GriddedFunction& u,
                                 const geometry::WeightParams& p);

/// A radial non-increasing function is its own symmetrization; this overload
/// only canonicalizes (merges equal values), making idempotence exact.
RadialProfile schwarz_symmetrize(const RadialProfile& s,
                                 const geometry::WeightParams& p);

/// Per-ray non-increasing rearrangement in the measure z^{N-1} dz, computed
/// through the substitution zeta = z^N (cell zeta-lengths are permuted, so
/// per-ray equimeasurability is exact).  Rays already non-increasing from
/// z = 0 pass through unchanged.
RayFunction starshaped_rearrange(const RayFunction& v, int dim);

/// Per-ray measure of {v > t} against z^{N-1} dz.
double ray_measure_above(const RayFunction& v, std::size_t ray, double t, int dim);

/// Piecewise-constant function on (0, infinity): value values[i] on
/// [edges[i], edges[i+1]), zero outside.
struct Cells1D {
    std::vector<double> edges;   ///< increasing, edges[0] >= 0
    std::vector<double> values;  ///< size edges.size()-1, >= 0
};

struct LandesReport {
    Cells1D rearranged;  ///< non-increasing, support starting at 0
    double lhs = 0.0;    ///< integral t^delta |f_hat'| dt (jump sum)
    double rhs = 0.0;    ///< integral t^delta |f'| dt (jump sum)
};

/// Equimeasurable non-increasing rearrangement on (0, infinity) w.r.t.
/// Lebesgue measure, with the weighted total-variation pair of the
/// rearrangement principle: lhs <= rhs for every delta >= 0.
LandesReport decreasing_rearrange_1d(const Cells1D& f, double delta);

struct PairCheck {
    double lhs = 0.0;
    double rhs = 0.0;
};

/// lhs = integral u v dmu_{l,alpha}, rhs = the same for the symmetrized
/// pair; u and v must share their grid.  Contract: lhs <= rhs.
PairCheck hardy_littlewood_check(const GriddedFunction& u,
                                 const GriddedFunction& v,
                                 const geometry::WeightParams& p);

/// integral of |grad u|^power |x|^exponent (x_N)^alpha dx: second-order grid
/// derivatives at the cell midpoints against exact cell weight masses.
/// Needs at least 3 cells per direction, power >= 1 and
/// exponent+N+alpha > 0.
double gradient_integral(const GriddedFunction& u, double exponent,
                         double power);

/// integral of u^power |x|^exponent (x_N)^alpha dx (midpoint values against
/// exact cell weight masses); power >= 0 and exponent+N+alpha > 0.
double weighted_integral(const GriddedFunction& u, double exponent,
                         double power);

struct PsCheck {
    double lhs = 0.0;       ///< integral |grad u|^p dmu_{m,alpha}
    double rhs = 0.0;       ///< integral |grad u*|^p dmu_{m,alpha}
    double tolerance = 0.0; ///< O(h^2) allowance of the discretization
};

/// Polya-Szego comparison with m = p k + (1-p) l; the weight parameters must
/// lie in a certified half-ball-optimal region.  Gradients use centered
/// differences on the cell centers; contract: rhs <= lhs + tolerance.
PsCheck polya_szego_check(const GriddedFunction& u, double p_exp,
                          const geometry::WeightParams& p);

/// Interpolation bound between the full and the partial gradient integral:
/// lhs  = int z^{N+alpha-1} sqrt(v_z^2 + B^2 |grad_theta v|^2/z^2) h dz dTheta
/// with B = (N+alpha-1)/(k+N+alpha-1), and
/// rhs  = (int |grad v| dmu_{0,alpha})^A (int |v_z| dmu_{0,alpha})^{1-A}.
/// Requires 0 <= A <= B^2; for k >= 0 the contract lhs >= rhs holds, with
/// equality for radial v.  v is read as point samples at the shared z-cell
/// midpoints.
PairCheck interpolation_bound_check(const RayFunction& v, double A,
                                    const geometry::WeightParams& p);

struct HolderCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double d1 = 0.0;
};

/// Starshaped Hoelder bound: with K = k+N+alpha-1, o = l+N+alpha,
/// s = N+alpha-1, t = N+alpha and the exponent l' = (l s - k t)/K,
/// lhs = (int_M |y|^{l'} dmu_{0,alpha})^{K/o} and
/// rhs = d1 (int_M dmu_{0,alpha})^{s(l-k+1)/o} (int_M |y|^{-1} dmu_{0,alpha})^{(k t - l s)/o},
/// d1 = (K/o)^{K/o} (t/s)^{s(l-k+1)/o}.  Requires l s/t <= k; then
/// lhs <= rhs with equality exactly for half-balls.
HolderCheck starshaped_holder_check(const geometry::StarSet& set,
                                    const geometry::WeightParams& p);

}  // namespace isoperim::rearrange
