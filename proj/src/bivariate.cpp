#include "hankelkit/bivariate.hpp"

#include "hankelkit/error.hpp"
#include "hankelkit/series.hpp"

#include <algorithm>

namespace hk {

BivariatePoly bivariate_mul(const BivariatePoly& a, const BivariatePoly& b)
{
    if (a.empty() || b.empty())
        return {};
    std::size_t ya = 0;
    std::size_t yb = 0;
    for (const auto& r : a)
        ya = std::max(ya, r.size());
    for (const auto& r : b)
        yb = std::max(yb, r.size());
    BivariatePoly out(a.size() + b.size() - 1, std::vector<ExactRat>(ya + yb, ExactRat(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            for (std::size_t p = 0; p < b.size(); ++p)
                for (std::size_t q = 0; q < b[p].size(); ++q)
                    out[i + p][j + q] += a[i][j] * b[p][q];
    return out;
}

namespace {

// Row i of the grid as a series in y of the given order.
Series y_series(const BivariatePoly& grid, std::size_t i, std::size_t order)
{
    if (i >= grid.size())
        return Series(order);
    return Series::polynomial(grid[i], order);
}

} // namespace

BivariateTable bivariate_expand(const BivariatePoly& num, const BivariatePoly& den, std::size_t order_x)
{
    if (den.empty() || den[0].empty() || den[0][0] == 0)
        throw Error(Errc::zero_constant_divisor, "bivariate denominator has zero constant term");
    // y-degrees above order_x - 1 never feed lower ones, so a y-order of order_x is exact.
    const std::size_t order_y = std::max<std::size_t>(order_x, 1);
    const Series den0 = y_series(den, 0, order_y);

    std::vector<Series> q;
    q.reserve(order_x);
    BivariateTable table;
    for (std::size_t n = 0; n < order_x; ++n) {
        Series acc = y_series(num, n, order_y);
        for (std::size_t i = 1; i <= n && i < den.size(); ++i)
            acc -= y_series(den, i, order_y) * q[n - i];
        q.push_back(acc / den0);
        std::vector<ExactRat> row(q.back().coeffs().begin(), q.back().coeffs().begin() + static_cast<std::ptrdiff_t>(n + 1));
        table.rows.push_back(std::move(row));
    }
    return table;
}

} // namespace hk
