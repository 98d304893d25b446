#include "hankelkit/hankel.hpp"

#include "hankelkit/error.hpp"

#include <utility>

namespace hk {

HankelMatrix::HankelMatrix(std::vector<ExactInt> source, std::size_t dim) : source_(std::move(source)), dim_(dim)
{
    const std::size_t needed = dim == 0 ? 0 : 2 * dim - 1;
    if (source_.size() < needed)
        throw Error(Errc::insufficient_terms, "Hankel matrix of dimension " + std::to_string(dim) + " needs "
                                                  + std::to_string(needed) + " terms, have "
                                                  + std::to_string(source_.size()));
}

IntMatrix HankelMatrix::to_int_matrix() const
{
    IntMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            m(i, j) = source_[i + j];
    return m;
}

RatMatrix HankelMatrix::to_rat_matrix() const
{
    return to_rat(to_int_matrix());
}

HankelMatrix hankel_matrix(std::span<const ExactInt> a, std::size_t dim)
{
    return HankelMatrix(std::vector<ExactInt>(a.begin(), a.end()), dim);
}

ExactInt bareiss_det(const IntMatrix& input)
{
    if (!input.is_square())
        throw Error(Errc::dimension_mismatch, "determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0)
        return 1;
    IntMatrix m = input;
    ExactInt sign = 1;
    ExactInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(swap, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                ExactInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

RatMatrix LDLDecomp::reconstruct() const
{
    return L * diagonal(D) * L.transpose();
}

ExactRat LDLDecomp::leading_minor(std::size_t n) const
{
    ExactRat p = 1;
    for (std::size_t k = 0; k <= n && k < D.size(); ++k)
        p *= D[k];
    return p;
}

LDLDecomp ldl(const RatMatrix& a)
{
    if (!a.is_square() || a != a.transpose())
        throw Error(Errc::dimension_mismatch, "LDL needs a symmetric matrix");
    const std::size_t n = a.rows();
    LDLDecomp out{RatMatrix::identity(n), std::vector<ExactRat>(n, ExactRat(0))};
    for (std::size_t j = 0; j < n; ++j) {
        ExactRat dj = a(j, j);
        for (std::size_t k = 0; k < j; ++k)
            dj -= out.L(j, k) * out.L(j, k) * out.D[k];
        if (dj == 0)
            throw Error(Errc::singular_leading_minor,
                        "leading minor of order " + std::to_string(j + 1) + " vanishes", j);
        out.D[j] = dj;
        for (std::size_t i = j + 1; i < n; ++i) {
            ExactRat v = a(i, j);
            for (std::size_t k = 0; k < j; ++k)
                v -= out.L(i, k) * out.L(j, k) * out.D[k];
            out.L(i, j) = v / dj;
        }
    }
    return out;
}

LDLDecomp ldl(const HankelMatrix& h)
{
    return ldl(h.to_rat_matrix());
}

std::vector<ExactInt> hankel_transform(std::span<const ExactInt> a, std::size_t count, DetCheck check)
{
    const HankelMatrix full = hankel_matrix(a, count);
    const IntMatrix ints = full.to_int_matrix();
    std::vector<ExactInt> out;
    out.reserve(count);

    if (check == DetCheck::bareiss_only) {
        for (std::size_t n = 0; n < count; ++n)
            out.push_back(bareiss_det(ints.leading(n + 1)));
        return out;
    }

    // One factorization of the largest block carries every leading minor.
    const LDLDecomp f = ldl(full);
    for (std::size_t n = 0; n < count; ++n) {
        ExactInt det = to_int(f.leading_minor(n));
        const bool confirm = check == DetCheck::both
            || (check == DetCheck::ldl_spot && (n % 4 == 3 || n + 1 == count));
        if (confirm) {
            ExactInt oracle = bareiss_det(ints.leading(n + 1));
            if (oracle != det)
                throw Error(Errc::identity_violation, "LDL determinant " + to_string(det) + " != Bareiss "
                                                          + to_string(oracle) + " at order " + std::to_string(n + 1),
                            n);
        }
        out.push_back(std::move(det));
    }
    return out;
}

std::vector<ExactInt> binomial_transform(std::span<const ExactInt> a, long k)
{
    std::vector<ExactInt> cur(a.begin(), a.end());
    const long sign = k < 0 ? -1 : 1;
    for (long step = 0; step < k * sign; ++step) {
        std::vector<ExactInt> next(cur.size(), ExactInt(0));
        for (std::size_t n = 0; n < cur.size(); ++n)
            for (std::size_t j = 0; j <= n; ++j) {
                ExactInt c = binomial(static_cast<long>(n), static_cast<long>(j));
                if (sign < 0 && (n - j) % 2 == 1)
                    c = -c;
                next[n] += c * cur[j];
            }
        cur = std::move(next);
    }
    return cur;
}

} // namespace hk
