#include "doctest.h"

#include "hankelkit/berlekamp.hpp"
#include "hankelkit/error.hpp"
#include "hankelkit/riordan.hpp"
#include "hankelkit/sequences.hpp"
#include "oracles.hpp"

using namespace hk;
using oracle::rats;

namespace {

std::vector<ExactInt> terms(Family f, long r, std::size_t count)
{
    return generate(f, r, count).terms;
}

using Rows = std::vector<std::vector<ExactRat>>;

} // namespace

TEST_CASE("B-M solves")
{
    const auto c3 = terms(Family::catalan, 3, 8);
    CHECK(solve_bm(c3, 4) == rats({-81, 142, -75, 15}));
    CHECK(solve_bm(c3, 3) == rats({27, -34, 11}));
    CHECK(solve_bm(c3, 2) == rats({-9, 7}));
    CHECK(solve_bm(c3, 1) == rats({3}));
    CHECK(solve_bm(terms(Family::catalan, 1, 2), 1) == rats({1}));

    try {
        solve_bm(oracle::ints({1, 1, 1, 1}), 2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::singular_system);
        CHECK(e.index() == 2);
    }
    CHECK_THROWS_AS(solve_bm(c3, 5), Error);
}

TEST_CASE("exact solver")
{
    const IntMatrix a{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    const auto x = solve_exact(a, oracle::ints({1, 2, 3}));
    for (std::size_t i = 0; i < 3; ++i) {
        ExactRat row = 0;
        for (std::size_t j = 0; j < 3; ++j)
            row += ExactRat(a(i, j)) * x[j];
        CHECK(row == ExactRat(i + 1));
    }
    // needs a row swap
    CHECK(solve_exact(IntMatrix{{0, 1}, {1, 0}}, oracle::ints({5, 7})) == rats({7, 5}));
}

TEST_CASE("B-M triangles")
{
    const auto t = bm_triangle(terms(Family::catalan, 1, 8), 4, "catalan");
    CHECK(t.rows == Rows{rats({1}), rats({-1, 3}), rats({1, -6, 5}), rats({-1, 10, -15, 7})});

    const auto t3 = bm_triangle(terms(Family::catalan, 3, 8), 4);
    CHECK(t3.rows[2] == rats({27, -34, 11}));
    CHECK(t3.rows[3] == rats({-81, 142, -75, 15}));

    CHECK(bm_triangle(oracle::ints({1, 1}), 1).rows == Rows{rats({1})});

    try {
        bm_triangle(oracle::ints({1, 1, 1, 1, 1, 1}), 3);
        FAIL("expected an error");
    } catch (const BMTriangleAborted& e) {
        CHECK(e.code() == Errc::singular_system);
        CHECK(e.index() == 1);
        CHECK(e.partial().rows == Rows{rats({1})});
    }
}

TEST_CASE("Catalan B-M closed form")
{
    CHECK(catalan_bm_term(3, 2) == -15);
    CHECK(catalan_bm_term(0, 0) == 1);
    for (long n = 0; n < 12; ++n)
        CHECK(catalan_bm_term(n, n) == 2 * n + 1);
    const auto t = bm_triangle(terms(Family::catalan, 1, 22), 11);
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] == ExactRat(catalan_bm_term(n, k)));
    CHECK_THROWS_AS(catalan_bm_term(1, 2), Error);
}

TEST_CASE("characteristic polynomials")
{
    const auto c3 = terms(Family::catalan, 3, 8);
    CHECK(char_poly(c3, 4).coeffs == rats({81, -142, 75, -15, 1}));
    CHECK(char_poly(c3, 1).coeffs == rats({-3, 1}));
    CHECK(char_poly(c3, 2).coeffs == rats({9, -7, 1}));
    CHECK(char_poly(c3, 3).coeffs == rats({-27, 34, -11, 1}));
    CHECK(char_poly(c3, 3).degree() == 3);
}

TEST_CASE("companion matrices")
{
    const auto c3 = terms(Family::catalan, 3, 8);
    CHECK(companion_check(c3, 4)
          == RatMatrix{{0, 0, 0, -81}, {1, 0, 0, 142}, {0, 1, 0, -75}, {0, 0, 1, 15}});
    CHECK(companion_check(terms(Family::catalan, 1, 2), 1) == RatMatrix{{1}});

    const auto c2 = terms(Family::catalan, 2, 6);
    CHECK(oracle::char_poly_leibniz(companion_check(c2, 3)) == char_poly(c2, 3).coeffs);
}

TEST_CASE("property: defining and recurrence properties")
{
    for (long r = 1; r <= 4; ++r) {
        const auto c = terms(Family::catalan, r, 16);
        const auto t = bm_triangle(c, 8);
        for (std::size_t n = 0; n < t.rows.size(); ++n) {
            const std::size_t d = n + 1;
            // a_{m+d} = sum_i g_{i+1} a_{m+i} on the fitted window m = 0..d-1
            for (std::size_t m = 0; m < d; ++m) {
                ExactRat predicted = 0;
                for (std::size_t i = 0; i < d; ++i)
                    predicted += t.rows[n][i] * ExactRat(c[m + i]);
                CHECK(predicted == ExactRat(c[m + d]));
            }
        }
    }
}

TEST_CASE("property: companion characteristic polynomial")
{
    for (long r = 1; r <= 4; ++r) {
        const auto c = terms(Family::catalan, r, 10);
        for (std::size_t d = 1; d <= 5; ++d)
            CHECK(oracle::char_poly_leibniz(companion_check(c, d)) == char_poly(c, d).coeffs);
    }
}

TEST_CASE("coefficient matrix is the inverse LDL factor")
{
    const TriMatrix m = coefficient_riordan_check(3, 5);
    const Rows expected{rats({1}), rats({-3, 1}), rats({9, -7, 1}), rats({-27, 34, -11, 1}),
                        rats({81, -142, 75, -15, 1})};
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(m.lower_row(i) == expected[i]);
    CHECK(m == to_matrix(inverse(L_catalan(3, 5)), 5));

    // row d of the B-M triangle is minus the first d entries of row d
    const auto t = bm_triangle(terms(Family::catalan, 3, 10), 4);
    for (std::size_t n = 0; n < 4; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(t.rows[n][k] == -m(n + 1, k));

    for (long r = 1; r <= 4; ++r)
        for (std::size_t dim = 1; dim <= 8; ++dim)
            CHECK(coefficient_riordan_check(r, dim) == to_matrix(inverse(L_catalan(r, dim)), dim));
}

TEST_CASE("bivariate generating function of the B-M triangle")
{
    const auto t1 = bm_gf_check(1, 4);
    CHECK(t1.rows == Rows{rats({1}), rats({-1, 3}), rats({1, -6, 5}), rats({-1, 10, -15, 7})});
    const auto t3 = bm_gf_check(3, 4);
    CHECK(t3.rows[3] == solve_bm(terms(Family::catalan, 3, 8), 4));
    for (std::size_t n = 0; n < 4; ++n)
        CHECK(t3.rows[n][0] == bm_triangle(terms(Family::catalan, 3, 8), 4).rows[n][0]);

    for (long r = 1; r <= 4; ++r)
        CHECK(bm_gf_check(r, 8).rows == bm_triangle(terms(Family::catalan, r, 16), 8).rows);
}
