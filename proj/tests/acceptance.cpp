// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "hankelkit/berlekamp.hpp"
#include "hankelkit/hankel.hpp"
#include "hankelkit/production.hpp"
#include "hankelkit/riordan.hpp"
#include "hankelkit/sequences.hpp"
#include "oracles.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace hk;
using oracle::ints;
using oracle::pascal;
using oracle::rats;

namespace {

class Tally {
public:
    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (!ok && failure_.empty())
            failure_ = what;
    }

    bool ok() const { return failure_.empty(); }
    std::size_t checks() const { return checks_; }
    const std::string& failure() const { return failure_; }

private:
    std::size_t checks_ = 0;
    std::string failure_;
};

template <class... Parts>
std::string label(const Parts&... parts)
{
    std::ostringstream s;
    ((s << parts << ' '), ...);
    return s.str();
}

using Rows = std::vector<std::vector<ExactRat>>;

Rows lower_rows(const RatMatrix& m)
{
    Rows out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(m.lower_row(i));
    return out;
}

Rows full_rows(const RatMatrix& m)
{
    Rows out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.push_back(m.row(i));
    return out;
}

Rows rows(std::initializer_list<std::initializer_list<long>> values)
{
    Rows out;
    for (const auto& row : values)
        out.push_back(rats(row));
    return out;
}

std::vector<ExactRat> as_rats(const std::vector<ExactInt>& v)
{
    return std::vector<ExactRat>(v.begin(), v.end());
}

// Independent sequence oracles built from binomial recurrences and rational g.f. recurrences.

ExactInt power(long base, long exp)
{
    ExactInt out = 1;
    for (long i = 0; i < exp; ++i)
        out *= base;
    return out;
}

std::vector<ExactInt> central_oracle(long r, std::size_t count)
{
    std::vector<ExactInt> out;
    for (long n = 0; n < static_cast<long>(count); ++n) {
        ExactInt s = 0;
        for (long j = 0; j <= n; ++j)
            s += pascal(n, j) * pascal(n, j) * power(r, j);
        out.push_back(s);
    }
    return out;
}

std::vector<ExactInt> catalan_oracle(long r, std::size_t count)
{
    const auto t = oracle::triangle_by_recurrence(2 * count + 1, r);
    std::vector<ExactInt> out;
    for (std::size_t n = 0; n < count; ++n)
        out.push_back(t[2 * n][n] - (n + 1 <= 2 * n ? t[2 * n][n + 1] : ExactInt(0)));
    return out;
}

std::vector<ExactInt> bessel_oracle(long r, std::size_t count)
{
    std::vector<ExactInt> out;
    for (long n = 0; n < static_cast<long>(count); ++n)
        out.push_back(n % 2 ? ExactInt(0) : pascal(n, n / 2) * power(r, n / 2));
    return out;
}

std::vector<ExactInt> b_oracle(long r, std::size_t count)
{
    return oracle::rational_gf_terms({1, -1}, {1, -(r + 2), r}, count);
}

IntMatrix hankel_of(const std::vector<ExactInt>& a, std::size_t dim)
{
    IntMatrix h(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            h(i, j) = a[i + j];
    return h;
}

// 2^n r^C(n+1,2)
ExactInt central_closed(long n, long r)
{
    return power(2, n) * power(r, n * (n + 1) / 2);
}

void check_transform(Tally& t, const std::string& name, const std::vector<ExactInt>& seq,
                     const std::vector<ExactInt>& expected, const std::string& where)
{
    const auto ht = hankel_transform(seq, expected.size(), DetCheck::both);
    t.expect(ht == expected, label(name, "transform", where));
    for (std::size_t n = 0; n < expected.size(); ++n)
        t.expect(oracle::gauss_det(hankel_of(seq, n + 1)) == ExactRat(expected[n]),
                 label(name, "elimination determinant", where, "n =", n));
}

Tally criterion_central()
{
    Tally t;
    for (long r = 1; r <= 5; ++r) {
        const auto seq = generate(Family::central, r, 17).terms;
        t.expect(seq == central_oracle(r, 17), label("central terms r =", r));
        std::vector<ExactInt> expected;
        for (long n = 0; n <= 8; ++n)
            expected.push_back(central_closed(n, r));
        check_transform(t, "central", seq, expected, label("r =", r));
    }
    const HankelMatrix h = hankel_matrix(generate(Family::central, 2, 7).terms, 4);
    t.expect(full_rows(h.to_rat_matrix())
                 == rows({{1, 3, 13, 63}, {3, 13, 63, 321}, {13, 63, 321, 1683}, {63, 321, 1683, 8989}}),
             "printed H(2)");
    const LDLDecomp d = ldl(h);
    t.expect(lower_rows(d.L) == rows({{1}, {3, 1}, {13, 6, 1}, {63, 33, 9, 1}}), "printed L(2)");
    t.expect(d.D == rats({1, 4, 8, 16}), "printed D(2)");
    t.expect(lower_rows(to_matrix(L_central(2, 4), 4)) == lower_rows(d.L), "L(2) as a Riordan array");
    return t;
}

Tally criterion_bessel()
{
    Tally t;
    for (long r = 1; r <= 5; ++r) {
        const auto seq = generate(Family::bessel, r, 13).terms;
        t.expect(seq == bessel_oracle(r, 13), label("bessel terms r =", r));
        std::vector<ExactInt> expected;
        for (long n = 0; n <= 6; ++n)
            expected.push_back(central_closed(n, r));
        check_transform(t, "bessel", seq, expected, label("r =", r));
    }
    for (long r = 1; r <= 5; ++r)
        for (const auto& [name, seq] : {std::pair{"central", central_oracle(r, 13)},
                                        std::pair{"catalan", catalan_oracle(r, 13)},
                                        std::pair{"bessel", bessel_oracle(r, 13)}}) {
            const auto base = hankel_transform(seq, 7);
            for (long k = -3; k <= 3; ++k) {
                // B^k a computed directly: sum_j C(n,j) k^(n-j) a_j
                std::vector<ExactInt> moved;
                for (long n = 0; n < 13; ++n) {
                    ExactInt s = 0;
                    for (long j = 0; j <= n; ++j)
                        s += pascal(n, j) * ipow(k, static_cast<unsigned long>(n - j)) * seq[static_cast<std::size_t>(j)];
                    moved.push_back(s);
                }
                t.expect(binomial_transform(seq, k) == moved, label(name, "binomial transform r =", r, "k =", k));
                t.expect(hankel_transform(moved, 7) == base, label(name, "binomial invariance r =", r, "k =", k));
            }
        }
    return t;
}

Tally criterion_catalan()
{
    Tally t;
    for (long r = 1; r <= 5; ++r) {
        const auto seq = generate(Family::catalan, r, 17).terms;
        t.expect(seq == catalan_oracle(r, 17), label("catalan terms r =", r));
        std::vector<ExactInt> expected;
        for (long n = 0; n <= 8; ++n)
            expected.push_back(power(r, n * (n + 1) / 2));
        check_transform(t, "catalan", seq, expected, label("r =", r));
    }
    const HankelMatrix h = hankel_matrix(generate(Family::catalan, 3, 7).terms, 4);
    t.expect(full_rows(h.to_rat_matrix())
                 == rows({{1, 3, 12, 57}, {3, 12, 57, 300}, {12, 57, 300, 1686}, {57, 300, 1686, 9912}}),
             "printed H(3)");
    const LDLDecomp d = ldl(h);
    t.expect(lower_rows(d.L) == rows({{1}, {3, 1}, {12, 7, 1}, {57, 43, 11, 1}}), "printed L(3)");
    t.expect(d.D == rats({1, 3, 9, 27}), "printed D(3)");
    t.expect(lower_rows(to_matrix(L_catalan(3, 4), 4)) == lower_rows(d.L), "L(3) as a Riordan array");
    return t;
}

Tally criterion_production()
{
    Tally t;
    t.expect(full_rows(p_catalan(1, 4).block(0, 0, 3, 4)) == rows({{0, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 1}}),
             "printed P(1)");
    t.expect(full_rows(p_catalan(2, 4).block(0, 0, 3, 4)) == rows({{0, 2, 0, 0}, {0, 1, 2, 0}, {0, 1, 1, 2}}),
             "printed P(2)");
    const RiordanArray ap1 = a_p(1, 6);
    const RiordanArray ap2 = a_p(2, 6);
    t.expect(lower_rows(to_matrix(ap1, 4)) == rows({{1}, {0, 1}, {0, 1, 1}, {0, 2, 2, 1}}), "printed A_P(1)");
    t.expect(lower_rows(to_matrix(ap2, 4)) == rows({{1}, {0, 2}, {0, 2, 4}, {0, 6, 8, 8}}), "printed A_P(2)");
    t.expect(lower_rows(matrix_from_production(p_catalan(1, 4), 4)) == lower_rows(to_matrix(ap1, 4)),
             "A_P(1) grown from P(1)");
    t.expect(lower_rows(matrix_from_production(p_catalan(2, 4), 4)) == lower_rows(to_matrix(ap2, 4)),
             "A_P(2) grown from P(2)");

    // B as the Pascal matrix, built from the binomial oracle
    RatMatrix pascal_matrix(6, 6);
    for (long i = 0; i < 6; ++i)
        for (long j = 0; j <= i; ++j)
            pascal_matrix(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = ExactRat(pascal(i, j));
    const RatMatrix ap1b = (to_matrix(ap1, 6) * pascal_matrix).leading(4);
    const RatMatrix ap2b = (to_matrix(ap2, 6) * pascal_matrix).leading(4);
    t.expect(lower_rows(ap1b) == rows({{1}, {1, 1}, {2, 3, 1}, {5, 9, 5, 1}}), "printed A_P(1)B = L(1)");
    t.expect(lower_rows(ap1b) == lower_rows(to_matrix(L_catalan(1, 4), 4)), "A_P(1)B is the catalan factor");
    t.expect(lower_rows(ap2b) == rows({{1}, {2, 2}, {6, 10, 4}, {22, 46, 32, 8}}), "printed A_P(2)B");
    t.expect(lower_rows(stieltjes_bridge(2, 4)) == rows({{1}, {2, 1}, {6, 5, 1}, {22, 23, 8, 1}}),
             "printed A_P(2)B(1,x/2)");

    for (long r = 1; r <= 4; ++r)
        for (std::size_t n = 1; n <= 8; ++n) {
            const RatMatrix bridge = stieltjes_bridge(r, n);
            t.expect(bridge == to_matrix(L_catalan(r, n), n), label("bridge r =", r, "N =", n));
            const LDLDecomp d = ldl(hankel_matrix(catalan_oracle(r, 2 * n), n));
            t.expect(bridge == d.L, label("bridge equals LDL factor r =", r, "N =", n));
        }

    const RatMatrix m = to_matrix(a_p(2, 5), 5);
    std::vector<ExactRat> sums;
    for (std::size_t i = 0; i < 5; ++i) {
        ExactRat s = 0;
        for (const auto& x : m.row(i))
            s += x;
        sums.push_back(s);
    }
    t.expect(sums == rats({1, 2, 6, 22, 90}), "A_P(2) row sums");
    return t;
}

Tally criterion_sum()
{
    Tally t;
    for (long r = 1; r <= 4; ++r) {
        const auto cat = catalan_oracle(r, 15);
        std::vector<ExactInt> sum_oracle;
        for (std::size_t n = 0; n + 1 < cat.size(); ++n)
            sum_oracle.push_back(cat[n] + cat[n + 1]);
        const auto seq = generate(Family::sum, r, 13).terms;
        t.expect(std::equal(seq.begin(), seq.end(), sum_oracle.begin()), label("sum terms r =", r));
        const auto b = b_oracle(r, 9);
        std::vector<ExactInt> expected;
        for (long n = 0; n <= 6; ++n)
            expected.push_back(power(r, n * (n + 1) / 2) * b[static_cast<std::size_t>(n + 1)]);
        check_transform(t, "sum", seq, expected, label("r =", r));
    }
    const auto printed = [](long r) { return hankel_transform(generate(Family::sum, r, 7).terms, 4); };
    t.expect(printed(1) == ints({2, 5, 13, 34}), "printed r = 1 values");
    t.expect(printed(2) == ints({3, 20, 272, 7424}), "printed r = 2 values");
    t.expect(printed(3) == ints({4, 51, 1971, 228906}), "printed r = 3 values");
    // term k of 1/(1-x-x^2) is F(k+1)
    const auto fib = oracle::rational_gf_terms({1}, {1, -1, -1}, 12);
    t.expect(printed(1) == std::vector<ExactInt>{fib[2], fib[4], fib[6], fib[8]},
             "r = 1 values are F(2n+3)");
    t.expect(ldl(hankel_matrix(generate(Family::sum, 1, 7).terms, 4)).D
                 == std::vector<ExactRat>{2, make_rat(5, 2), make_rat(13, 5), make_rat(34, 13)},
             "printed r = 1 diagonal");
    t.expect(ldl(hankel_matrix(generate(Family::sum, 2, 7).terms, 4)).D
                 == std::vector<ExactRat>{3, make_rat(20, 3), make_rat(272, 20), make_rat(7424, 272)},
             "printed r = 2 diagonal");
    return t;
}

Tally criterion_b()
{
    Tally t;
    for (long r = 1; r <= 5; ++r) {
        const auto gf = b_oracle(r, 21);
        const auto pell = oracle::rational_gf_terms({1}, {1, -r, -1}, 21);
        for (std::size_t n = 0; n <= 20; ++n) {
            t.expect(gen_pell(n, r) == pell[n], label("pell r =", r, "n =", n));
            ExactInt bt = 0;
            for (std::size_t k = 0; k <= n; ++k)
                bt += pascal(static_cast<long>(n), static_cast<long>(k)) * pell[k];
            t.expect(bt == gf[n], label("binomial transform of pell r =", r, "n =", n));
            for (BMethod m : {BMethod::gf, BMethod::trig_sum, BMethod::binom_double_sum, BMethod::floor_double_sum})
                t.expect(b_seq(n, r, m) == gf[n], label("b method", static_cast<int>(m), "r =", r, "n =", n));
        }
        t.expect(binomial_transform(generate(Family::pell, r, 21).terms, 1) == gf, label("library transform r =", r));
    }
    const auto b2 = b_oracle(2, 17);
    for (long n = 0; n <= 15; ++n) {
        ExactRat s = 0;
        for (long k = 0; 2 * k <= n + 2; ++k)
            s += ExactRat(pascal(n + 2, 2 * k)) / ExactRat(power(2, k));
        const ExactRat formula = ExactRat(power(2, (n + 2) * (n + 1) / 2)) * s;
        const ExactInt expected = power(2, n * (n + 1) / 2) * b2[static_cast<std::size_t>(n + 1)];
        t.expect(formula == ExactRat(expected), label("r = 2 variant formula n =", n));
        t.expect(closed_ht_sum_r2_variant(static_cast<std::size_t>(n)) == expected, label("r = 2 variant n =", n));
    }
    const auto interleaved = oracle::rational_gf_terms({1, 3, -1, -1}, {1, 0, -6, 0, 1}, 6);
    t.expect(interleaved == ints({1, 3, 5, 17, 29, 99}), "interleaved oracle");
    t.expect(generate(Family::interleaved, 0, 6).terms == interleaved, "interleaved values");
    std::vector<ExactInt> scaled;
    for (std::size_t n = 0; n < 5; ++n)
        scaled.push_back(interleaved_pell_scaled(n));
    t.expect(scaled == ints({1, 3, 20, 272, 7424}), "interleaved scaling");
    return t;
}

Tally criterion_bm()
{
    Tally t;
    const auto c3 = catalan_oracle(3, 8);
    t.expect(solve_bm(c3, 4) == rats({-81, 142, -75, 15}), "solve_bm c(.;3)");
    t.expect(char_poly(c3, 4).coeffs == rats({81, -142, 75, -15, 1}), "char poly c(.;3)");
    const RatMatrix companion = companion_check(c3, 4);
    t.expect(full_rows(companion) == rows({{0, 0, 0, -81}, {1, 0, 0, 142}, {0, 1, 0, -75}, {0, 0, 1, 15}}),
             "printed companion matrix");
    // H^-1 H' by elimination, independent of the library solver
    RatMatrix h(4, 4);
    RatMatrix shifted(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            h(i, j) = ExactRat(c3[i + j]);
            shifted(i, j) = ExactRat(c3[i + j + 1]);
        }
    t.expect(h * companion == shifted, "companion satisfies H C = H'");
    t.expect(oracle::char_poly_leibniz(companion) == char_poly(c3, 4).coeffs, "companion char poly");

    const Rows printed = rows({{1}, {-1, 3}, {1, -6, 5}, {-1, 10, -15, 7}});
    const BMTriangle tri = bm_triangle(catalan_oracle(1, 8), 4);
    Rows got;
    for (const auto& row : tri.rows)
        got.push_back(row);
    t.expect(got == printed, "printed Catalan B-M triangle");
    Rows closed;
    for (long n = 0; n < 4; ++n) {
        std::vector<ExactRat> row;
        for (long k = 0; k <= n; ++k) {
            const ExactInt v = pascal(n + k + 1, 2 * k) - (n - k + 1 == 0 ? ExactInt(1) : ExactInt(0));
            row.emplace_back((n - k) % 2 ? ExactInt(-v) : v);
            t.expect(catalan_bm_term(n, k) == ((n - k) % 2 ? ExactInt(-v) : v), label("closed term", n, k));
        }
        closed.push_back(row);
    }
    t.expect(closed == printed, "closed-form general term");
    t.expect(bm_gf_check(1, 4).rows == printed, "bivariate gf expansion");
    t.expect(coefficient_riordan_check(3, 5) == to_matrix(inverse(L_catalan(3, 5)), 5), "coefficient matrix N = 5");
    return t;
}

Tally criterion_structure()
{
    Tally t;
    for (long r = 1; r <= 4; ++r)
        for (const auto& [name, seq] : {std::pair{"central", central_oracle(r, 17)},
                                        std::pair{"catalan", catalan_oracle(r, 17)},
                                        std::pair{"bessel", bessel_oracle(r, 17)}}) {
            const HankelMatrix h = hankel_matrix(seq, 9);
            const LDLDecomp d = ldl(h);
            t.expect(d.reconstruct() == h.to_rat_matrix(), label(name, "LDL reconstruction r =", r));
            for (std::size_t n = 0; n < 9; ++n)
                t.expect(ExactRat(bareiss_det(hankel_of(seq, n + 1))) == d.leading_minor(n),
                         label(name, "Bareiss vs LDL r =", r, "n =", n));
        }

    std::mt19937 rng(2024);
    const std::size_t order = 12;
    std::vector<RiordanArray> arrays{RiordanArray::binomial(order), a_p(2, order), L_catalan(3, order),
                                     L_central(1, order)};
    for (int i = 0; i < 3; ++i) {
        auto d = oracle::random_rats(rng, order);
        auto h = oracle::random_rats(rng, order);
        d[0] = 1 + i;
        h[0] = 0;
        h[1] = i % 2 ? -1 : 2;
        arrays.emplace_back(Series(d), Series(h));
    }
    for (std::size_t i = 0; i < arrays.size(); ++i) {
        const RiordanArray a = arrays[i].truncated(order);
        const RatMatrix ma = to_matrix(a, order);
        t.expect(to_matrix(multiply(a, inverse(a)), order) == RatMatrix::identity(order), label("inverse law", i));
        t.expect(to_matrix(inverse(a), order) * ma == RatMatrix::identity(order), label("left inverse law", i));
        for (std::size_t j = 0; j < arrays.size(); ++j) {
            const RiordanArray b = arrays[j].truncated(order);
            t.expect(to_matrix(multiply(a, b), order) == ma * to_matrix(b, order), label("product law", i, j));
        }
        const auto f = oracle::random_rats(rng, order);
        RatMatrix column(order, 1);
        for (std::size_t k = 0; k < order; ++k)
            column(k, 0) = f[k];
        t.expect(hk::apply(a, f) == (ma * column).column(0), label("fundamental theorem", i));
    }

    for (long r = 1; r <= 4; ++r) {
        const std::size_t n = 8;
        const RatMatrix p = to_matrix(L_catalan_inverse(r, n), n);
        RatMatrix h(n, n);
        const auto c = catalan_oracle(r, 2 * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                h(i, j) = ExactRat(c[i + j]);
        const RatMatrix phpt = p * h * p.transpose();
        t.expect(phpt.is_diagonal(), label("orthogonality r =", r));
        for (std::size_t k = 0; k < n; ++k)
            t.expect(phpt(k, k) == ExactRat(power(r, static_cast<long>(k))), label("orthogonality weight r =", r, k));
    }

    for (long r = 1; r <= 3; ++r) {
        const auto cat = catalan_oracle(r, 20);
        std::vector<ExactInt> seq;
        for (std::size_t n = 0; n + 1 < cat.size(); ++n)
            seq.push_back(cat[n] + cat[n + 1]);
        const auto b = b_oracle(r, 9);
        const RatMatrix inv = invert_lower(ldl(hankel_matrix(seq, 9)).L);
        for (std::size_t n = 0; n <= 8; ++n)
            for (std::size_t k = 0; k <= n; ++k)
                t.expect(is_integral(ExactRat(b[n]) * inv(n, k)), label("scaled inverse integrality r =", r, n, k));
    }
    return t;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Tally()>>> criteria{
        {"1 central Hankel transform 2^n r^C(n+1,2), H(2), L(2), D(2)", criterion_central},
        {"2 Bessel moments and binomial invariance", criterion_bessel},
        {"3 generalized Catalan Hankel transform r^C(n+1,2), H(3), L(3), D(3)", criterion_catalan},
        {"4 production matrices, A_P arrays and the bridge to the catalan factor", criterion_production},
        {"5 Hankel transform of c(n;r)+c(n+1;r)", criterion_sum},
        {"6 b_r methods, Pell binomial transform, r = 2 variant, interleaved Pell", criterion_b},
        {"7 Berlekamp-Massey solves, companion matrix, triangle and coefficient array", criterion_bm},
        {"8 structural properties", criterion_structure},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Tally t;
        std::string error;
        try {
            t = run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const bool ok = error.empty() && t.ok();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << name << " (" << t.checks() << " checks)";
        if (!error.empty())
            std::cout << ": exception " << error;
        else if (!ok)
            std::cout << ": " << t.failure();
        std::cout << '\n';
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failed) << "/"
              << criteria.size() << '\n';
    return failed ? 1 : 0;
}
