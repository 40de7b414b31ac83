#include "isoperim/regions.hpp"

#include <cmath>
#include <limits>

#include "isoperim/errors.hpp"

namespace isoperim::regions {

using detail::require;

double l1_threshold(double k, int dim, double alpha)
{
    require(dim >= 2, "N must be at least 2");
    require(alpha > -1.0, "alpha must exceed -1");
    require(k >= 0.0, "k must be non-negative");
    const double s = dim + alpha - 1.0;
    const double t = dim + alpha;
    const double kk = k + s;  // k+N+alpha-1
    return kk * kk * kk / (kk * kk - s * s / t) - t;
}

double breaking_threshold(double k, int dim, double alpha)
{
    require(dim >= 2, "N must be at least 2");
    require(alpha > -1.0, "alpha must exceed -1");
    const double s = dim + alpha - 1.0;
    require(k + s > 0.0, "k+N+alpha-1 must be positive");
    return k + s / (k + s) - 1.0;
}

bool constant_positive(const geometry::WeightParams& p)
{
    p.validate_for_ratio();
    return p.l * (p.dim + p.alpha - 1.0) / (p.dim + p.alpha) <= p.k;
}

Verdict classify(const geometry::WeightParams& p)
{
    p.validate_for_ratio();
    const double s = p.dim + p.alpha - 1.0;
    const double t = p.dim + p.alpha;

    Verdict v;
    v.thresholds.l_break = breaking_threshold(p.k, p.dim, p.alpha);
    v.thresholds.l_positivity = p.k * t / s;
    v.thresholds.l1 = (p.k >= 0.0) ? l1_threshold(p.k, p.dim, p.alpha)
                                   : std::numeric_limits<double>::quiet_NaN();

    const double positivity_gap = p.k - p.l * s / t;
    const double scale = std::max({1.0, std::fabs(p.k), std::fabs(p.l)});
    v.on_positivity_boundary = std::fabs(positivity_gap) <= 1e-12 * scale;
    v.constant_positive = positivity_gap >= 0.0;

    // Each sufficient case implies the positivity condition, so the half-ball
    // labels always carry constant_positive = true.
    if (p.l + 1.0 <= p.k) {
        v.label = Label::half_ball_optimal;
        v.sufficient_case = Case::i;
        return v;
    }
    if (p.k <= 0.0 && positivity_gap >= 0.0) {  // k <= l+1 holds past case (i)
        v.label = Label::half_ball_optimal;
        v.sufficient_case = Case::ii;
        v.unique_halfball = positivity_gap > 0.0;
        return v;
    }
    if (p.k >= 0.0 && p.l <= v.thresholds.l1) {  // k <= l+1 holds past case (i)
        v.label = Label::half_ball_optimal;
        v.sufficient_case = Case::iii;
        v.unique_halfball = p.l < v.thresholds.l1;
        return v;
    }
    // The instability certificate trumps the vanishing-constant certificate:
    // past the breaking threshold the half ball is never optimal, whether or
    // not the constant degenerates to zero.
    if (p.l > v.thresholds.l_break) {
        v.label = Label::symmetry_breaking;
        return v;
    }
    if (positivity_gap < 0.0) {
        v.label = Label::zero_constant;
        return v;
    }
    return v;  // undetermined
}

const char* label_name(Label label)
{
    switch (label) {
    case Label::half_ball_optimal: return "HalfBallOptimal";
    case Label::symmetry_breaking: return "SymmetryBreaking";
    case Label::zero_constant: return "ZeroConstant";
    case Label::undetermined: return "Undetermined";
    }
    return "?";
}

const char* case_name(Case c)
{
    switch (c) {
    case Case::none: return "none";
    case Case::i: return "i";
    case Case::ii: return "ii";
    case Case::iii: return "iii";
    }
    return "?";
}

}  // namespace isoperim::regions
