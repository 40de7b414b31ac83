#pragma once

// Witness rectangles showing that no isoperimetric inequality can hold on
// the upper half-plane with weight y^alpha when alpha is in (-1, 0): thin
// horizontal strips {0 < x < 1, a < y < b} pushed far from the axis drive
// the perimeter/area ratio to zero. Everything here is closed-form; the
// strips degenerate so fast that quadrature would only add noise near the
// singular line y = 0.

namespace isoperim::counterex {

/// The strip {0 < x < 1, a < y < b} with weight y^alpha, alpha in (-1, 0).
///
/// Alongside the corners the struct carries u = a^{alpha+1} and
/// v = b^{alpha+1} - a^{alpha+1}, which parametrize every weighted quantity
/// without cancellation. This is not a cache: the extreme witnesses have
/// (b - a)/a far below one double ulp, so the corners alone cannot represent
/// them (b rounds to a), while (u, v) stay comfortably inside the floating
/// range. Build instances through make_rect or make_rect_uv so the two
/// parametrizations stay consistent.
struct RectSet {
    double a = 1.0;      ///< lower edge height, > 0
    double b = 2.0;      ///< upper edge height, >= a (may round to a)
    double alpha = -0.5; ///< weight exponent, in (-1, 0)
    double u = 0.0;      ///< a^{alpha+1}
    double v = 0.0;      ///< b^{alpha+1} - a^{alpha+1}, >= 0
};

/// Builds the strip from its corners. Requires 0 < a <= b and
/// alpha in (-1, 0); a == b is allowed as the degenerate strip of zero
/// weighted area. v is computed through expm1/log1p, so narrow strips
/// (b - a much smaller than a) lose no precision.
RectSet make_rect(double a, double b, double alpha);

/// Builds the strip from the substituted variables. Requires u > 0, v >= 0,
/// alpha in (-1, 0). Throws if the implied corner a = u^{1/(alpha+1)}
/// overflows the double range. For extreme aspect ratios the stored b can
/// round to a; the weighted quantities below still evaluate exactly from
/// (u, v).
RectSet make_rect_uv(double u, double v, double alpha);

/// Weighted area integral of y^alpha over the strip: v/(alpha+1).
double rect_area(const RectSet& r);

/// Weighted length of the boundary away from {y = 0}: both vertical sides
/// plus the top and bottom edges, 2v/(alpha+1) + a^alpha + b^alpha.
double rect_perimeter(const RectSet& r);

/// The isoperimetric quotient perimeter / area^{(alpha+1)/(alpha+2)}.
/// Degenerate strips (v = 0) return +infinity. For fixed u the quotient
/// blows up both as v -> 0 and as v -> infinity; making it small needs the
/// two-step choice below.
double rect_ratio(const RectSet& r);

/// Returns a strip whose ratio is provably below eps: first v is fixed so
/// the area-driven term stays below eps/4, then u so the edge-driven term
/// stays below eps/4 as well. Both choices are closed-form and continuous
/// in eps, which makes the achieved ratio strictly increasing in eps — a
/// run over shrinking eps yields strictly decreasing ratios witnessing that
/// the infimum of the quotient is zero. Throws when eps is so extreme that
/// the strip leaves the double-precision range (the required corner height
/// grows like a power of 1/eps).
RectSet vanishing_sequence(double alpha, double eps);

}  // namespace isoperim::counterex
