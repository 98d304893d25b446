#include "hankelkit/production.hpp"

#include "hankelkit/error.hpp"

namespace hk {

ProdMatrix production_matrix(const TriMatrix& a)
{
    if (!a.is_square() || a.rows() == 0)
        throw Error(Errc::dimension_mismatch, "production matrix needs a non-empty square array");
    const std::size_t n = a.rows() - 1;
    return solve_lower(a.leading(n), a.block(1, 0, n, n));
}

ProdMatrix p_catalan(const ExactInt& r, std::size_t dim)
{
    ProdMatrix p(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 1; j <= i && j < dim; ++j)
            p(i, j) = 1;
        if (i + 1 < dim)
            p(i, i + 1) = r;
    }
    return p;
}

TriMatrix matrix_from_production(const ProdMatrix& p, std::size_t dim)
{
    TriMatrix out(dim, dim);
    if (dim == 0)
        return out;
    out(0, 0) = 1;
    const std::size_t span = std::min(dim, std::min(p.rows(), p.cols()));
    for (std::size_t n = 0; n + 1 < dim; ++n)
        for (std::size_t k = 0; k < span; ++k) {
            if (out(n, k) == 0)
                continue;
            for (std::size_t j = 0; j < span; ++j)
                out(n + 1, j) += out(n, k) * p(k, j);
        }
    return out;
}

RiordanArray a_p(const ExactInt& r, std::size_t dim)
{
    const std::size_t order = dim + 2;
    const Series h_inv = Series::polynomial({0, 1, -1}, order)
        / Series::polynomial({ExactRat(r), ExactRat(-(r - 1))}, order);
    const RiordanArray via_inverse = inverse(RiordanArray(Series::one(order), h_inv));

    const Series closed_h
        = (Series::polynomial({ExactRat(1), ExactRat(r - 1)}, order) - central_radical(r, order)).scaled(ExactRat(1, 2));
    const RiordanArray closed(Series::one(order), closed_h);

    const TriMatrix m = to_matrix(closed, dim);
    if (m != to_matrix(via_inverse, dim))
        throw Error(Errc::identity_violation, "closed and inverse forms of A_P disagree");
    if (m != matrix_from_production(p_catalan(r, dim), dim))
        throw Error(Errc::identity_violation, "A_P does not match the array grown from its production matrix");
    return closed;
}

TriMatrix stieltjes_bridge(const ExactInt& r, std::size_t dim)
{
    if (r == 0)
        throw Error(Errc::unsupported_parameter, "r = 0 has no (1, x/r) scaling");
    const std::size_t order = dim + 2;
    const RiordanArray scaling(Series::one(order), Series::x(order).scaled(ExactRat(1) / ExactRat(r)));
    return to_matrix(multiply(multiply(a_p(r, dim), RiordanArray::binomial(order)), scaling), dim);
}

} // namespace hk
