#pragma once

#include "isoperim/geometry.hpp"

namespace isoperim::regions {

enum class Label {
    half_ball_optimal,  ///< a sufficient condition certifies half-ball optimality
    symmetry_breaking,  ///< half-balls are certified non-optimal
    zero_constant,      ///< the infimum is zero, no minimizer exists
    undetermined,       ///< between the certified regimes
};

/// Which sufficient condition certified half-ball optimality.
enum class Case { none, i, ii, iii };

struct Thresholds {
    double l1 = 0.0;            ///< largest l of sufficient case (iii); NaN for k < 0
    double l_break = 0.0;       ///< largest l compatible with radial stability
    double l_positivity = 0.0;  ///< largest l keeping the constant positive
};

struct Verdict {
    Label label = Label::undetermined;
    Case sufficient_case = Case::none;
    bool constant_positive = true;
    /// Strictness of the sufficient inequality (cases ii and iii only), i.e.
    /// half-balls are the unique minimizers.
    bool unique_halfball = false;
    /// k sits on (within 1e-12 relative of) the positivity threshold.
    bool on_positivity_boundary = false;
    Thresholds thresholds;
};

/// Largest l for which sufficient case (iii) applies at a given k >= 0:
/// (k+N+alpha-1)^3 / ((k+N+alpha-1)^2 - (N+alpha-1)^2/(N+alpha)) - N - alpha.
double l1_threshold(double k, int dim, double alpha);

/// Largest l compatible with a non-negative second variation at the half
/// ball: k + (N+alpha-1)/(k+N+alpha-1) - 1.
double breaking_threshold(double k, int dim, double alpha);

/// The infimum is positive iff l (N+alpha-1)/(N+alpha) <= k.
bool constant_positive(const geometry::WeightParams& p);

/// Precedence: sufficient cases (i), (ii), (iii) with inclusive inequalities
/// (each implies a positive constant), then symmetry breaking (which may
/// coincide with a vanishing constant; see constant_positive in the verdict),
/// then zero constant, else undetermined.
Verdict classify(const geometry::WeightParams& p);

const char* label_name(Label label);
const char* case_name(Case c);

}  // namespace isoperim::regions
