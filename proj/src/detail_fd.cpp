#include "isoperim/detail/fd.hpp"

#include "isoperim/errors.hpp"

namespace isoperim::detail {

std::vector<double> derivative_on_grid(const std::vector<double>& x,
                                       const std::vector<double>& f)
{
    const std::size_t n = x.size();
    require(n >= 3, "derivative stencils need at least 3 grid points");
    require(f.size() == n, "samples must match the grid");
    std::vector<double> d(n);

    auto three_point = [&](std::size_t a, std::size_t b, std::size_t c, double at) {
        // d/dx at `at` of the quadratic through the three samples.
        const double xa = x[a], xb = x[b], xc = x[c];
        const double la = (2.0 * at - xb - xc) / ((xa - xb) * (xa - xc));
        const double lb = (2.0 * at - xa - xc) / ((xb - xa) * (xb - xc));
        const double lc = (2.0 * at - xa - xb) / ((xc - xa) * (xc - xb));
        return la * f[a] + lb * f[b] + lc * f[c];
    };

    d[0] = three_point(0, 1, 2, x[0]);
    for (std::size_t i = 1; i + 1 < n; ++i)
        d[i] = three_point(i - 1, i, i + 1, x[i]);
    d[n - 1] = three_point(n - 3, n - 2, n - 1, x[n - 1]);
    return d;
}

}  // namespace isoperim::detail
