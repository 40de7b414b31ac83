#include "isoperim/counterex.hpp"

#include <cmath>

#include "isoperim/errors.hpp"

namespace isoperim::counterex {

using detail::require;

namespace {

void check_alpha(double alpha)
{
    require(std::isfinite(alpha) && alpha > -1.0 && alpha < 0.0,
            "alpha must lie strictly between -1 and 0");
}

void check_rect(const RectSet& r)
{
    check_alpha(r.alpha);
    require(std::isfinite(r.a) && r.a > 0.0, "a must be positive");
    require(std::isfinite(r.b) && r.b >= r.a, "b must be at least a");
    require(std::isfinite(r.u) && r.u > 0.0,
            "u must be positive (build strips through make_rect)");
    require(std::isfinite(r.v) && r.v >= 0.0,
            "v must be non-negative (build strips through make_rect)");
}

}  // namespace

RectSet make_rect(double a, double b, double alpha)
{
    check_alpha(alpha);
    require(std::isfinite(a) && a > 0.0, "a must be positive");
    require(std::isfinite(b) && b >= a, "b must be at least a");

    RectSet out;
    out.a = a;
    out.b = b;
    out.alpha = alpha;
    out.u = std::pow(a, alpha + 1.0);
    // b^{alpha+1} - a^{alpha+1} = u * expm1((alpha+1) * log1p((b-a)/a)):
    // exact to working precision even when b - a is a sliver of a.
    out.v = b == a ? 0.0
                   : out.u * std::expm1((alpha + 1.0) *
                                        std::log1p((b - a) / a));
    require(std::isfinite(out.u) && out.u > 0.0 && std::isfinite(out.v),
            "the weighted heights a^{alpha+1}, b^{alpha+1} must be "
            "representable");
    return out;
}

RectSet make_rect_uv(double u, double v, double alpha)
{
    check_alpha(alpha);
    require(std::isfinite(u) && u > 0.0, "u must be positive");
    require(std::isfinite(v) && v >= 0.0, "v must be non-negative");
    require(std::isfinite(u + v), "u + v must be representable");

    RectSet out;
    out.u = u;
    out.v = v;
    out.alpha = alpha;
    out.a = std::pow(u, 1.0 / (alpha + 1.0));
    out.b = std::pow(u + v, 1.0 / (alpha + 1.0));
    require(std::isfinite(out.a) && out.a > 0.0 && std::isfinite(out.b),
            "the corner heights u^{1/(alpha+1)} leave the double range");
    return out;
}

double rect_area(const RectSet& r)
{
    check_rect(r);
    return r.v / (r.alpha + 1.0);
}

double rect_perimeter(const RectSet& r)
{
    check_rect(r);
    // a^alpha = u^{alpha/(alpha+1)} and b^alpha = (u+v)^{alpha/(alpha+1)}:
    // evaluating through u, v keeps extreme strips exact.
    const double edge = r.alpha / (r.alpha + 1.0);
    return 2.0 * r.v / (r.alpha + 1.0) + std::pow(r.u, edge) +
           std::pow(r.u + r.v, edge);
}

double rect_ratio(const RectSet& r)
{
    const double area = rect_area(r);
    return rect_perimeter(r) /
           std::pow(area, (r.alpha + 1.0) / (r.alpha + 2.0));
}

RectSet vanishing_sequence(double alpha, double eps)
{
    check_alpha(alpha);
    require(std::isfinite(eps) && eps > 0.0, "eps must be positive");

    const double a1 = alpha + 1.0;
    const double a2 = alpha + 2.0;

    // Step 1: pick v so the area-driven term of the quotient sits at eps/4.
    // The selector 2 (alpha+1)^{-1/(alpha+1)} dominates the true coefficient
    // 2 (alpha+1)^{-1/(alpha+2)} on (-1, 0), so the achieved term is
    // (alpha+1)^{1/(alpha+1)-1/(alpha+2)} * eps/4 <= eps/4.
    const double c1 = 2.0 * std::pow(a1, -1.0 / a1);
    const double v = std::pow(eps / (4.0 * c1), a2);
    require(std::isfinite(v) && v > 0.0,
            "eps is out of range: the strip thickness v = (eps/(4 c1))^"
            "{alpha+2} leaves the double-precision range");

    // Step 2: pick u so the lower-edge contribution
    // u^{alpha/(alpha+1)} (alpha+1)^{(alpha+1)/(alpha+2)} v^{-(alpha+1)/(alpha+2)}
    // sits at eps/8; the upper edge contributes strictly less, so the
    // edge-driven term stays below eps/4 and the whole quotient below eps/2.
    const double c2 = std::pow(a1, a1 / a2);
    const double edge_target = (eps / 8.0) * std::pow(v, a1 / a2) / c2;
    const double u = std::pow(edge_target, a1 / alpha);
    require(std::isfinite(u) && u > 0.0,
            "eps is out of range: the required strip height u = "
            "(eps v^{(alpha+1)/(alpha+2)} / (8 c2))^{(alpha+1)/alpha} "
            "leaves the double-precision range");

    return make_rect_uv(u, v, alpha);
}

}  // namespace isoperim::counterex
