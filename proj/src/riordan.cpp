#include "hankelkit/riordan.hpp"

#include "hankelkit/error.hpp"

namespace hk {

RiordanArray::RiordanArray(Series d, Series h) : d_(std::move(d)), h_(std::move(h))
{
    if (d_.order() == 0 || d_[0] == 0)
        throw Error(Errc::invalid_riordan_array, "d(0) must be nonzero");
    if (h_.order() < 2 || h_[0] != 0 || h_[1] == 0)
        throw Error(Errc::invalid_riordan_array, "h needs h(0) = 0 and h'(0) != 0");
}

RiordanArray RiordanArray::identity(std::size_t order)
{
    return RiordanArray(Series::one(order), Series::x(order));
}

RiordanArray RiordanArray::binomial(std::size_t order)
{
    const Series denom = Series::polynomial({1, -1}, order);
    return RiordanArray(Series::one(order) / denom, Series::x(order) / denom);
}

TriMatrix to_matrix(const RiordanArray& array, std::size_t dim)
{
    if (dim > array.order())
        throw Error(Errc::insufficient_order, "matrix of dimension " + std::to_string(dim)
                                                  + " needs series order >= dimension, have "
                                                  + std::to_string(array.order()));
    TriMatrix m(dim, dim);
    Series column = array.d().truncated(dim);
    const Series h = array.h().truncated(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t n = k; n < dim; ++n)
            m(n, k) = column[n];
        column *= h;
    }
    return m;
}

RiordanArray multiply(const RiordanArray& lhs, const RiordanArray& rhs)
{
    return RiordanArray(lhs.d() * series_compose(rhs.d(), lhs.h()), series_compose(rhs.h(), lhs.h()));
}

RiordanArray inverse(const RiordanArray& array)
{
    const std::size_t n = array.order();
    const Series hbar = series_revert(array.h().truncated(n));
    return RiordanArray(Series::one(n) / series_compose(array.d().truncated(n), hbar), hbar);
}

std::vector<ExactRat> apply(const RiordanArray& array, const Series& input)
{
    const std::size_t n = array.order();
    if (input.order() < n)
        throw Error(Errc::insufficient_order, "input has " + std::to_string(input.order())
                                                  + " terms, array order is " + std::to_string(n));
    const Series out = array.d().truncated(n) * series_compose(input.truncated(n), array.h().truncated(n));
    return out.coeffs();
}

std::vector<ExactRat> apply(const RiordanArray& array, const std::vector<ExactRat>& input)
{
    return apply(array, Series(input));
}

RiordanArray binomial_power(long k, std::size_t dim)
{
    RiordanArray out = RiordanArray::identity(dim);
    if (k == 0)
        return out;
    const RiordanArray step = k > 0 ? RiordanArray::binomial(dim) : inverse(RiordanArray::binomial(dim));
    for (long i = 0; i < (k > 0 ? k : -k); ++i)
        out = multiply(out, step);
    return out;
}

Series shift_divide(const Series& numerator, const ExactRat& scale)
{
    if (numerator.order() == 0 || numerator[0] != 0)
        throw Error(Errc::identity_violation, "numerator does not vanish at x = 0");
    return numerator.shifted_down(1).scaled(1 / scale);
}

Series central_radical(const ExactInt& r, std::size_t order)
{
    const ExactInt rm1 = r - 1;
    std::vector<ExactRat> q{ExactRat(1), ExactRat(-2 * (r + 1)), ExactRat(rm1 * rm1)};
    return series_sqrt(Series::polynomial(q, order));
}

namespace {

// 1 + (r+1)x + r x^2
Series tridiagonal_denominator(const ExactInt& r, std::size_t order)
{
    return Series::polynomial({ExactRat(1), ExactRat(r + 1), ExactRat(r)}, order);
}

void require_nonzero(const ExactInt& r)
{
    if (r == 0)
        throw Error(Errc::unsupported_parameter, "r = 0 divides by 2rx");
}

} // namespace

RiordanArray L_central(const ExactInt& r, std::size_t dim)
{
    require_nonzero(r);
    const std::size_t order = dim + 2;
    const Series root = central_radical(r, order);
    const Series x = Series::x(order);

    // (1 - (r+1)x - sqrt(Q)) vanishes to second order, so h(0) = 0 after the shift.
    const Series numerator = Series::polynomial({ExactRat(1), ExactRat(-(r + 1))}, order) - root;
    const RiordanArray direct(Series::one(order) / root, shift_divide(numerator, ExactRat(2 * r)));

    const Series den = tridiagonal_denominator(r, order);
    const Series d_inv = Series::polynomial({ExactRat(1), ExactRat(0), ExactRat(-r)}, order) / den;
    const RiordanArray via_inverse = inverse(RiordanArray(d_inv, x / den));

    if (to_matrix(direct, dim) != to_matrix(via_inverse, dim))
        throw Error(Errc::identity_violation, "closed and inverse forms of the central LDL factor disagree");
    return direct;
}

RiordanArray L_catalan_inverse(const ExactInt& r, std::size_t dim)
{
    const std::size_t order = dim + 2;
    return RiordanArray(Series::one(order) / Series::polynomial({ExactRat(1), ExactRat(r)}, order),
                        Series::x(order) / tridiagonal_denominator(r, order));
}

RiordanArray L_catalan(const ExactInt& r, std::size_t dim)
{
    return inverse(L_catalan_inverse(r, dim));
}

RiordanArray L_catalan_closed(const ExactInt& r, std::size_t dim)
{
    require_nonzero(r);
    const std::size_t order = dim + 2;
    const Series root = central_radical(r, order);
    const Series d_num = Series::polynomial({ExactRat(1), ExactRat(-(r - 1))}, order) - root;
    const Series h_num = Series::polynomial({ExactRat(1), ExactRat(-(r + 1))}, order) - root;
    return RiordanArray(shift_divide(d_num, 2), shift_divide(h_num, ExactRat(2 * r)));
}

ExactInt central_L_entry(long n, long k, const ExactInt& r, CentralEntryMethod method)
{
    if (k < 0 || k > n)
        throw Error(Errc::index_out_of_triangle,
                    "L(" + std::to_string(n) + "," + std::to_string(k) + ") is outside the triangle");
    ExactInt sum = 0;
    for (long j = 0; j <= n; ++j) {
        if (method == CentralEntryMethod::sumA) {
            if (j < k)
                continue;
            sum += hk::binomial(n, j) * hk::binomial(n, j - k) * ipow(r, static_cast<unsigned long>(j - k));
        } else {
            const long e = n - k - j;
            if (e < 0 || e > j)
                continue;
            sum += hk::binomial(n, j) * hk::binomial(j, e) * ipow(r, static_cast<unsigned long>(e))
                * ipow(r + 1, static_cast<unsigned long>(2 * j - (n - k)));
        }
    }
    return sum;
}

ExactInt egf_column_coeff(long n, long k, const ExactInt& r)
{
    if (k < 0 || k > n)
        throw Error(Errc::index_out_of_triangle,
                    "column coefficient (" + std::to_string(n) + "," + std::to_string(k) + ") is outside the triangle");
    const std::size_t order = static_cast<std::size_t>(n) + 1;
    std::vector<ExactRat> expo(order);
    ExactRat term = 1;
    for (std::size_t i = 0; i < order; ++i) {
        expo[i] = term;
        term *= ExactRat(r + 1) / static_cast<unsigned long>(i + 1);
    }
    std::vector<ExactRat> bessel(order, ExactRat(0));
    for (long j = 0; 2 * j + k <= n; ++j)
        bessel[static_cast<std::size_t>(2 * j + k)] = ExactRat(ipow(r, static_cast<unsigned long>(j)))
            / ExactRat(factorial(static_cast<unsigned long>(j)) * factorial(static_cast<unsigned long>(j + k)));
    const Series product = Series(std::move(expo)) * Series(std::move(bessel));
    return to_int(product[static_cast<std::size_t>(n)] * ExactRat(factorial(static_cast<unsigned long>(n))));
}

} // namespace hk
