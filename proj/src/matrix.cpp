#include "hankelkit/matrix.hpp"

namespace hk {

RatMatrix to_rat(const IntMatrix& m)
{
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = m(i, j);
    return out;
}

IntMatrix to_int(const RatMatrix& m)
{
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = to_int(m(i, j));
    return out;
}

RatMatrix solve_lower(const RatMatrix& lower, const RatMatrix& rhs)
{
    const std::size_t n = lower.rows();
    if (!lower.is_square() || rhs.rows() != n)
        throw Error(Errc::dimension_mismatch, "solve_lower: shape mismatch");
    RatMatrix x(n, rhs.cols());
    for (std::size_t i = 0; i < n; ++i) {
        if (lower(i, i) == 0)
            throw Error(Errc::singular_diagonal, "zero diagonal entry at row " + std::to_string(i), i);
        for (std::size_t c = 0; c < rhs.cols(); ++c) {
            ExactRat acc = rhs(i, c);
            for (std::size_t k = 0; k < i; ++k)
                acc -= lower(i, k) * x(k, c);
            x(i, c) = acc / lower(i, i);
        }
    }
    return x;
}

RatMatrix invert_lower(const RatMatrix& lower)
{
    return solve_lower(lower, RatMatrix::identity(lower.rows()));
}

RatMatrix diagonal(const std::vector<ExactRat>& values)
{
    RatMatrix out(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        out(i, i) = values[i];
    return out;
}

} // namespace hk
