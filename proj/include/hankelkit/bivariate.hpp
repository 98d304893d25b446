#pragma once

#include "hankelkit/exact.hpp"

#include <cstddef>
#include <vector>

namespace hk {

/// Polynomial in x and y as a coefficient grid: grid[i][j] is the coefficient of x^i y^j.
using BivariatePoly = std::vector<std::vector<ExactRat>>;

/// Coefficients of a bivariate series: rows[n][k] is the coefficient of x^n y^k, k <= n.
struct BivariateTable {
    std::vector<std::vector<ExactRat>> rows;

    std::size_t order_x() const noexcept { return rows.size(); }

    friend bool operator==(const BivariateTable&, const BivariateTable&) = default;
};

BivariatePoly bivariate_mul(const BivariatePoly& a, const BivariatePoly& b);

/// Expand num/den as a series in x whose coefficients are series in y, keeping
/// rows n < order_x and y-degrees k <= n.
/// Throws Error(zero_constant_divisor) if den has zero constant term.
BivariateTable bivariate_expand(const BivariatePoly& num, const BivariatePoly& den, std::size_t order_x);

} // namespace hk
