#pragma once

#include <vector>

namespace isoperim::detail {

/// First derivative of samples f on a strictly increasing (possibly
/// non-uniform) grid x: centered second-order three-point stencils in the
/// interior, one-sided second-order stencils at the two ends.
std::vector<double> derivative_on_grid(const std::vector<double>& x,
                                       const std::vector<double>& f);

}  // namespace isoperim::detail
