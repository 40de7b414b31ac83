#pragma once

#include <functional>
#include <vector>

#include "isoperim/geometry.hpp"

namespace isoperim::spectral {

/// Angular test function sampled on an angular rule.  If derivative samples
/// are absent the quadratic forms fall back to second-order finite
/// differences on the grid.
struct AngularFunction {
    geometry::AngularRule rule;
    std::vector<double> values;
    std::vector<double> derivative;  ///< optional analytic d/dtheta samples
};

AngularFunction sample_angular(int dim, double alpha, int nodes,
                               const std::function<double(double)>& f);
AngularFunction sample_angular(int dim, double alpha, int nodes,
                               const std::function<double(double)>& f,
                               const std::function<double(double)>& df);

/// h-weighted mean of the samples: (integral u h dTheta) / (integral h dTheta).
double weighted_mean(const AngularFunction& u);

/// Volume-compensation coefficients of the profile family
/// m_eps = 1 + eps (u + s1) + eps^2 s2 keeping the weighted volume fixed to
/// second order: s1 = -mean(u), s2 = -(l+N+alpha-1) int (u+s1)^2 h / int h.
struct ConstraintCoeffs {
    double s1 = 0.0;
    double s2 = 0.0;
};

ConstraintCoeffs volume_constraint_coeffs(const AngularFunction& u,
                                          const geometry::WeightParams& p);

/// Second variation of the isoperimetric quotient at the half-ball in
/// direction u (after volume compensation):
/// (k+N+alpha-1)(k-l-1) int (u+s1)^2 h dTheta + int |grad u|^2 h dTheta.
double second_variation(const AngularFunction& u, const geometry::WeightParams& p);

struct EigenResult {
    double min_eigenvalue = 0.0;
    std::vector<double> grid;         ///< cell centers
    std::vector<double> eigenvector;  ///< mass-normalized, positive at the right end
    double residual = 0.0;            ///< ||A v - lambda B v||_2 / ||B v||_2
};

/// Smallest Rayleigh quotient int v'^2 cos^alpha / int v^2 cos^alpha over
/// zero-weighted-mean v on (-pi/2, pi/2); the weighted Wirtinger constant,
/// analytically 1 + alpha with minimizer sin t.  Finite-volume discretization
/// on grid_size interior cells; the constant kernel mode is skipped, so the
/// value is the second pencil eigenvalue.
EigenResult wirtinger_min_eig(double alpha, int grid_size = 2000);

/// Sharpest constant mu with int |grad v|^2 h dTheta >= mu int v^2 h dTheta
/// for zero-h-mean v on the upper hemisphere; analytically N + alpha - 1.
/// N = 2 reduces to the Wirtinger problem.  For N >= 3 the minimum lives in
/// the first azimuthal harmonic v = f(theta_1) w_1, giving the radial-profile
/// quotient int (f'^2 + (N-2) f^2 / sin^2) w / int f^2 w with
/// w = sin^{N-2} cos^alpha and no mean constraint.
EigenResult poincare_min_eig(int dim, double alpha, int grid_size = 2000);

enum class Stability { stable, marginal, unstable };

struct StabilityReport {
    Stability verdict = Stability::marginal;
    double coefficient = 0.0;   ///< (k+N+alpha-1)(l+1-k)
    double poincare_min = 0.0;  ///< computed spectral threshold
    double gap = 0.0;           ///< dimensionless (coefficient - min) / max(1, min)
};

/// Half-ball stability: the second variation is non-negative for every
/// admissible perturbation iff (k+N+alpha-1)(l+1-k) <= poincare minimum.
/// Marginal within a 1e-6 dimensionless band.  The spectral threshold is
/// Richardson-extrapolated over grids grid_size/2 and grid_size.
StabilityReport stability_verdict(const geometry::WeightParams& p, int grid_size = 1200);

/// Wirtinger minimum minus (1+alpha) for alpha in (-1, 0): the slack of the
/// half-line (k = l = 0, N = 2) stability bound, analytically zero.
/// Richardson-extrapolated like stability_verdict.
double halfline_stability_margin(double alpha, int grid_size = 2000);

const char* stability_name(Stability s);

}  // namespace isoperim::spectral
