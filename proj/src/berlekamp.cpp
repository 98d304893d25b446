#include "hankelkit/berlekamp.hpp"

#include "hankelkit/hankel.hpp"
#include "hankelkit/riordan.hpp"
#include "hankelkit/sequences.hpp"

#include <utility>

namespace hk {

BMTriangleAborted::BMTriangleAborted(const Error& cause, BMTriangle partial)
    : Error(cause.code(), cause.message() + " (" + std::to_string(partial.rows.size()) + " rows solved)",
            cause.index()),
      partial_(std::move(partial))
{
}

std::vector<ExactRat> solve_exact(const IntMatrix& a, std::span<const ExactInt> b)
{
    const std::size_t n = a.rows();
    if (!a.is_square() || b.size() != n)
        throw Error(Errc::dimension_mismatch, "solve_exact: shape mismatch");

    // Bareiss on the augmented matrix [A | b]; rows stay integral.
    IntMatrix m(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = a(i, j);
        m(i, n) = b[i];
    }
    ExactInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m(swap, k) == 0)
                ++swap;
            if (swap == n)
                throw Error(Errc::singular_system, "system of order " + std::to_string(n) + " is singular", n);
            for (std::size_t j = 0; j <= n; ++j)
                std::swap(m(k, j), m(swap, j));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                ExactInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }

    std::vector<ExactRat> x(n, ExactRat(0));
    for (std::size_t i = n; i-- > 0;) {
        ExactRat acc(m(i, n));
        for (std::size_t j = i + 1; j < n; ++j)
            acc -= ExactRat(m(i, j)) * x[j];
        x[i] = acc / ExactRat(m(i, i));
    }
    return x;
}

std::vector<ExactRat> solve_bm(std::span<const ExactInt> a, std::size_t d)
{
    if (a.size() < 2 * d)
        throw Error(Errc::insufficient_terms, "order " + std::to_string(d) + " needs " + std::to_string(2 * d)
                                                  + " terms, have " + std::to_string(a.size()));
    const IntMatrix h = hankel_matrix(a.first(2 * d), d).to_int_matrix();
    try {
        return solve_exact(h, a.subspan(d, d));
    } catch (const Error& e) {
        if (e.code() == Errc::singular_system)
            throw Error(Errc::singular_system, "Hankel system of order " + std::to_string(d) + " is singular", d);
        throw;
    }
}

BMTriangle bm_triangle(std::span<const ExactInt> a, std::size_t rows, std::string source)
{
    BMTriangle t{std::move(source), {}};
    for (std::size_t n = 0; n < rows; ++n) {
        try {
            t.rows.push_back(solve_bm(a, n + 1));
        } catch (const Error& e) {
            if (e.code() != Errc::singular_system)
                throw;
            throw BMTriangleAborted(Error(e.code(), e.message(), n), std::move(t));
        }
    }
    return t;
}

ExactInt catalan_bm_term(long n, long k)
{
    if (k < 0 || k > n)
        throw Error(Errc::index_out_of_triangle,
                    "(" + std::to_string(n) + "," + std::to_string(k) + ") is outside the triangle");
    ExactInt v = binomial(n + k + 1, 2 * k) - binomial(0, n - k + 1);
    return (n - k) % 2 == 0 ? v : ExactInt(-v);
}

CharPoly char_poly(std::span<const ExactInt> a, std::size_t d)
{
    CharPoly p;
    const std::vector<ExactRat> g = d == 0 ? std::vector<ExactRat>{} : solve_bm(a, d);
    for (const auto& gi : g)
        p.coeffs.push_back(-gi);
    p.coeffs.emplace_back(1);
    return p;
}

RatMatrix companion_check(std::span<const ExactInt> a, std::size_t d)
{
    const std::vector<ExactRat> g = solve_bm(a, d);
    const IntMatrix h = hankel_matrix(a.first(2 * d), d).to_int_matrix();
    RatMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<ExactInt> column(a.begin() + static_cast<std::ptrdiff_t>(j + 1),
                                     a.begin() + static_cast<std::ptrdiff_t>(j + 1 + d));
        const std::vector<ExactRat> x = solve_exact(h, column);
        for (std::size_t i = 0; i < d; ++i)
            m(i, j) = x[i];
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j + 1 < d; ++j)
            if (m(i, j) != (i == j + 1 ? 1 : 0))
                throw Error(Errc::identity_violation, "H^-1 H' is not a companion matrix");
    for (std::size_t i = 0; i < d; ++i)
        if (m(i, d - 1) != g[i])
            throw Error(Errc::identity_violation, "companion last column differs from the B-M solution");
    return m;
}

TriMatrix coefficient_riordan_check(const ExactInt& r, std::size_t dim)
{
    const SeqVec c = generate(Family::catalan, r, dim == 0 ? 0 : 2 * (dim - 1));
    TriMatrix m(dim, dim);
    for (std::size_t d = 0; d < dim; ++d) {
        const CharPoly p = char_poly(c.terms, d);
        for (std::size_t k = 0; k <= d; ++k)
            m(d, k) = p.coeffs[k];
    }
    if (m != to_matrix(L_catalan_inverse(r, dim), dim))
        throw Error(Errc::identity_violation, "characteristic polynomial coefficients differ from the Riordan array");
    return m;
}

BivariateTable bm_gf_check(const ExactInt& r, std::size_t rows)
{
    const BivariatePoly num{{ExactRat(r)}, {ExactRat(r), ExactRat(1)}};
    const BivariatePoly den = bivariate_mul({{ExactRat(1)}, {ExactRat(0), ExactRat(-1)}},
                                            {{ExactRat(1)}, {ExactRat(r + 1), ExactRat(-1)}, {ExactRat(r)}});
    BivariateTable table = bivariate_expand(num, den, rows);
    const SeqVec c = generate(Family::catalan, r, 2 * rows);
    if (table.rows != bm_triangle(c.terms, rows).rows)
        throw Error(Errc::identity_violation, "bivariate generating function differs from the B-M triangle");
    return table;
}

} // namespace hk
