#include "hankelkit/verify.hpp"

#include "hankelkit/berlekamp.hpp"
#include "hankelkit/error.hpp"
#include "hankelkit/hankel.hpp"
#include "hankelkit/production.hpp"
#include "hankelkit/riordan.hpp"
#include "hankelkit/sequences.hpp"
#include "hankelkit/series.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <future>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

namespace hk::verify {

namespace {

using Params = std::map<std::string, std::string>;
using Outcome = std::pair<std::string, std::string>; // expected, actual

struct Task {
    std::string id;
    std::string ref;
    Params params;
    std::function<Outcome()> run;
};

std::string join(const std::vector<ExactInt>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + to_string(v[i]);
    return out;
}

std::string join(const std::vector<ExactRat>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + to_string(v[i]);
    return out;
}

// Lower-triangular rows separated by ';'.
std::string lower_rows(const RatMatrix& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        out += (i ? ";" : "") + join(m.lower_row(i));
    return out;
}

std::string full_rows(const RatMatrix& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        out += (i ? ";" : "") + join(m.row(i));
    return out;
}

std::vector<ExactInt> terms(Family f, long r, std::size_t count)
{
    return generate(f, r, count).terms;
}

Outcome verdict(bool ok, const std::string& what)
{
    return {what, ok ? what : "violated"};
}

class Registry {
public:
    void add(const std::string& base, Params params, std::string ref, std::function<Outcome()> fn)
    {
        std::string id = base;
        if (!params.empty()) {
            id += "[";
            bool first = true;
            for (const auto& [k, v] : params) {
                id += (first ? "" : ",") + k + "=" + v;
                first = false;
            }
            id += "]";
        }
        tasks_.push_back(Task{std::move(id), std::move(ref), std::move(params), std::move(fn)});
    }

    std::vector<Task>& tasks() { return tasks_; }

private:
    std::vector<Task> tasks_;
};

Params rp(long r)
{
    return {{"r", std::to_string(r)}};
}

Params rnp(long r, std::size_t n)
{
    return {{"n", std::to_string(n)}, {"r", std::to_string(r)}};
}

// det(xI - M) by Faddeev-LeVerrier, ascending coefficients.
std::vector<ExactRat> faddeev_leverrier(const RatMatrix& a)
{
    const std::size_t n = a.rows();
    std::vector<ExactRat> c(n + 1, ExactRat(0));
    c[n] = 1;
    RatMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix next = a * m;
        for (std::size_t i = 0; i < n; ++i)
            next(i, i) += c[n - k + 1];
        m = std::move(next);
        const RatMatrix am = a * m;
        ExactRat trace = 0;
        for (std::size_t i = 0; i < n; ++i)
            trace += am(i, i);
        c[n - k] = -trace / static_cast<unsigned long>(k);
    }
    return c;
}

void add_series(Registry& reg, const Options& o)
{
    const std::size_t order = o.n_max + 8;
    for (long r = 1; r <= o.r_max; ++r) {
        reg.add("series-sqrt-square", rp(r), "sqrt(1-2(r+1)x+(r-1)^2x^2) squares back to its argument", [=] {
            const Series q = Series::polynomial({ExactRat(1), ExactRat(-2 * (r + 1)), ExactRat((r - 1) * (r - 1))}, order);
            const Series s = series_sqrt(q);
            return Outcome{join(q.coeffs()), join((s * s).coeffs())};
        });
        reg.add("series-revert-roundtrip", rp(r), "x/(1+(r+1)x+rx^2) composed with its reversion is x", [=] {
            const Series h = Series::x(order) / Series::polynomial({1, r + 1, r}, order);
            const Series g = series_revert(h);
            return Outcome{join(Series::x(order).coeffs()) + "|" + join(Series::x(order).coeffs()),
                           join(series_compose(h, g).coeffs()) + "|" + join(series_compose(g, h).coeffs())};
        });
        reg.add("series-div-mul", rp(r), "(1-x)/(1-(r+2)x+rx^2) times its denominator is 1-x", [=] {
            const Series den = Series::polynomial({1, -(r + 2), r}, order);
            const Series num = Series::polynomial({1, -1}, order);
            return Outcome{join(num.coeffs()), join(((num / den) * den).coeffs())};
        });
    }
}

void add_sequences(Registry& reg, const Options& o)
{
    const std::size_t n_seq = std::max<std::size_t>(o.n_max, 20);
    for (long r = 1; r <= o.r_max; ++r) {
        reg.add("triangle-symmetry", rp(r), "T(n,k,r) = T(n,n-k,r)", [=] {
            const Triangle t = triangle(n_seq + 1, r);
            bool ok = true;
            for (const auto& row : t.rows)
                ok = ok && std::equal(row.begin(), row.end(), row.rbegin());
            return verdict(ok, "symmetric rows 0.." + std::to_string(n_seq));
        });
        std::vector<ExactInt> gf;
        for (std::size_t n = 0; n <= n_seq; ++n)
            gf.push_back(b_seq(n, r, BMethod::gf));
        for (auto [method, name] : {std::pair{BMethod::trig_sum, "trig_sum"},
                                    std::pair{BMethod::binom_double_sum, "binom_double_sum"},
                                    std::pair{BMethod::floor_double_sum, "floor_double_sum"}}) {
            Params p = rp(r);
            p["method"] = name;
            reg.add("b-method-agrees", p, "b_r(n) formulas agree with the expansion of (1-x)/(1-(r+2)x+rx^2)", [=] {
                std::vector<ExactInt> v;
                for (std::size_t n = 0; n <= n_seq; ++n)
                    v.push_back(b_seq(n, r, method));
                return Outcome{join(gf), join(v)};
            });
        }
        reg.add("b-binomial-of-pell", rp(r), "b_r is the binomial transform of 1/(1-rx-x^2)", [=] {
            return Outcome{join(gf), join(binomial_transform(terms(Family::pell, r, n_seq + 1), 1))};
        });
        reg.add("central-egf", rp(r), "T(2n,n,r) = sum_k C(n,2k)C(2k,k)r^k(r+1)^(n-2k)", [=] {
            std::vector<ExactInt> v;
            for (long n = 0; n <= static_cast<long>(n_seq); ++n) {
                ExactInt s = 0;
                for (long k = 0; 2 * k <= n; ++k)
                    s += binomial(n, 2 * k) * binomial(2 * k, k) * ipow(r, static_cast<unsigned long>(k))
                        * ipow(r + 1, static_cast<unsigned long>(n - 2 * k));
                v.push_back(s);
            }
            return Outcome{join(v), join(terms(Family::central, r, n_seq + 1))};
        });
    }
    for (std::size_t n = 0; n <= std::max<std::size_t>(o.n_max, 15); ++n)
        reg.add("r2-variant", {{"n", std::to_string(n)}}, "2^C(n+2,2) sum_k C(n+2,2k) 2^-k = h_n(2)", [=] {
            return Outcome{to_string(closed_ht(HankelKind::sum, n, 2)), to_string(closed_ht_sum_r2_variant(n))};
        });
    reg.add("interleaved-pell", {}, "interleaved Pell bisections and their 4^floor(n^2/4) scaling", [] {
        std::vector<ExactInt> scaled;
        for (std::size_t n = 0; n < 5; ++n)
            scaled.push_back(interleaved_pell_scaled(n));
        return Outcome{"1,3,5,17,29,99|1,3,20,272,7424",
                       join(terms(Family::interleaved, 0, 6)) + "|" + join(scaled)};
    });
}

// det of the (n+1) block by LDL and by Bareiss; mismatch surfaces as a failure string.
std::string checked_det(const std::vector<ExactInt>& seq, std::size_t n)
{
    const HankelMatrix h = hankel_matrix(seq, n + 1);
    const ExactInt via_ldl = to_int(ldl(h).leading_minor(n));
    const ExactInt via_bareiss = bareiss_det(h.to_int_matrix());
    if (via_ldl != via_bareiss)
        return "ldl " + to_string(via_ldl) + " != bareiss " + to_string(via_bareiss);
    return to_string(via_ldl);
}

void add_hankel(Registry& reg, const Options& o)
{
    const std::size_t n_sum = o.n_max >= 2 ? o.n_max - 2 : 0;
    for (long r = 1; r <= o.r_max; ++r) {
        for (std::size_t n = 0; n <= o.n_max; ++n) {
            reg.add("prop1-central", rnp(r, n), "Hankel transform of T(2n,n,r) is 2^n r^C(n+1,2)", [=] {
                return Outcome{to_string(closed_ht(HankelKind::central, n, r)),
                               checked_det(terms(Family::central, r, 2 * n + 1), n)};
            });
            reg.add("catalan-ht", rnp(r, n), "Hankel transform of c(n;r) is r^C(n+1,2)", [=] {
                return Outcome{to_string(closed_ht(HankelKind::catalan, n, r)),
                               checked_det(terms(Family::catalan, r, 2 * n + 1), n)};
            });
        }
        for (std::size_t n = 0; n <= n_sum; ++n) {
            reg.add("sum-ht", rnp(r, n), "Hankel transform of c(n;r)+c(n+1;r) is r^C(n+1,2) b_r(n+1)", [=] {
                return Outcome{to_string(closed_ht(HankelKind::sum, n, r)),
                               checked_det(terms(Family::sum, r, 2 * n + 1), n)};
            });
            reg.add("bessel-ht", rnp(r, n), "sequences with e.g.f. I_0(2 sqrt(r) x) have Hankel transform 2^n r^C(n+1,2)",
                    [=] {
                        return Outcome{to_string(closed_ht(HankelKind::central, n, r)),
                                       checked_det(terms(Family::bessel, r, 2 * n + 1), n)};
                    });
        }
        const std::size_t count = n_sum + 1;
        for (Family f : {Family::central, Family::catalan, Family::bessel})
            for (long k = -3; k <= 3; ++k) {
                if (k == 0)
                    continue;
                Params p = rp(r);
                p["family"] = family_name(f);
                p["k"] = std::to_string(k);
                reg.add("binomial-invariance", p, "the Hankel transform is invariant under binomial transforms", [=] {
                    const auto seq = terms(f, r, 2 * count - 1);
                    return Outcome{join(hankel_transform(seq, count)),
                                   join(hankel_transform(binomial_transform(seq, k), count))};
                });
            }
        for (Family f : {Family::central, Family::catalan, Family::sum}) {
            Params p = rp(r);
            p["family"] = family_name(f);
            const std::size_t m = f == Family::sum ? count : o.n_max;
            reg.add("ldl-reconstruction", p, "L diag(D) L^T rebuilds the Hankel matrix exactly", [=] {
                const HankelMatrix h = hankel_matrix(terms(f, r, 2 * m - 1), m);
                return Outcome{full_rows(h.to_rat_matrix()), full_rows(ldl(h).reconstruct())};
            });
        }
        reg.add("orthogonality", rp(r), "(1/(1+rx), x/(1+(r+1)x+rx^2)) diagonalizes the Hankel matrix of c(n;r)", [=] {
            const std::size_t m = o.n_max;
            const RatMatrix p = to_matrix(inverse(L_catalan(r, m)), m);
            const RatMatrix h = hankel_matrix(terms(Family::catalan, r, 2 * m - 1), m).to_rat_matrix();
            std::vector<ExactRat> powers;
            for (std::size_t k = 0; k < m; ++k)
                powers.emplace_back(ipow(r, static_cast<unsigned long>(k)));
            return Outcome{full_rows(diagonal(powers)), full_rows(p * h * p.transpose())};
        });
        reg.add("ldl-factor-central", rp(r), "the LDL factor for T(2n,n,r) is the central Riordan array", [=] {
            const std::size_t m = o.n_max;
            return Outcome{lower_rows(to_matrix(L_central(r, m), m)),
                           lower_rows(ldl(hankel_matrix(terms(Family::central, r, 2 * m - 1), m)).L)};
        });
        reg.add("ldl-factor-catalan", rp(r), "the LDL factor for c(n;r) is (1/(1+rx), x/(1+(r+1)x+rx^2))^-1", [=] {
            const std::size_t m = o.n_max;
            return Outcome{lower_rows(to_matrix(L_catalan(r, m), m)),
                           lower_rows(ldl(hankel_matrix(terms(Family::catalan, r, 2 * m - 1), m)).L)};
        });
        if (r <= 3)
            reg.add("scaled-inverse-integral", rp(r), "b_r(n) times row n of L^-1 is integral with diagonal b_r(n)", [=] {
                const std::size_t m = o.n_max + 1;
                const RatMatrix inv = invert_lower(ldl(hankel_matrix(terms(Family::sum, r, 2 * m - 1), m)).L);
                bool ok = true;
                for (std::size_t n = 0; n < m; ++n) {
                    const ExactRat scale(b_seq(n, r));
                    for (std::size_t k = 0; k <= n; ++k)
                        ok = ok && is_integral(scale * inv(n, k));
                    ok = ok && scale * inv(n, n) == scale;
                }
                return verdict(ok, "integral rows 0.." + std::to_string(m - 1));
            });
    }
}

std::vector<std::pair<std::string, RiordanArray>> named_arrays(long r, std::size_t dim)
{
    return {{"L_central", L_central(r, dim)},
            {"L_catalan", L_catalan(r, dim)},
            {"A_P", a_p(r, dim)},
            {"B", RiordanArray::binomial(dim + 2)}};
}

void add_riordan(Registry& reg, const Options& o)
{
    const std::size_t dim = std::max<std::size_t>(o.n_max, 12);
    for (long r = 1; r <= o.r_max; ++r) {
        reg.add("group-law", rp(r), "the matrix of a Riordan product is the product of the matrices", [=] {
            std::string expected;
            std::string actual;
            for (const auto& [na, a] : named_arrays(r, dim))
                for (const auto& [nb, b] : named_arrays(r, dim)) {
                    expected += lower_rows(to_matrix(a, dim) * to_matrix(b, dim)) + "|";
                    actual += lower_rows(to_matrix(multiply(a, b), dim)) + "|";
                }
            return Outcome{expected, actual};
        });
        reg.add("inverse-law", rp(r), "R times inverse(R) is the identity", [=] {
            std::string expected;
            std::string actual;
            for (const auto& [name, a] : named_arrays(r, dim)) {
                expected += lower_rows(RatMatrix::identity(dim)) + "|";
                actual += lower_rows(to_matrix(multiply(a, inverse(a)), dim)) + "|";
            }
            return Outcome{expected, actual};
        });
        reg.add("fundamental-theorem", rp(r), "applying (d,h) to f gives d(f o h)", [=] {
            std::vector<ExactRat> seq;
            for (std::size_t i = 0; i < dim + 2; ++i)
                seq.emplace_back(static_cast<long>((i * 7 + static_cast<std::size_t>(r)) % 11) - 5);
            std::string expected;
            std::string actual;
            for (const auto& [name, a] : named_arrays(r, dim)) {
                const RiordanArray t = a.truncated(dim);
                RatMatrix column(dim, 1);
                for (std::size_t i = 0; i < dim; ++i)
                    column(i, 0) = seq[i];
                expected += join((to_matrix(t, dim) * column).column(0)) + "|";
                actual += join(hk::apply(t, seq)) + "|";
            }
            return Outcome{expected, actual};
        });
        reg.add("column-consistency", rp(r), "columns of the central factor match the e.g.f. and both double sums", [=] {
            const TriMatrix m = to_matrix(L_central(r, 13), 13);
            std::string expected;
            std::string actual;
            for (long n = 0; n <= 12; ++n)
                for (long k = 0; k <= std::min(n, 4L); ++k) {
                    const std::string e = to_string(m(static_cast<std::size_t>(n), static_cast<std::size_t>(k)));
                    expected += e + "," + e + "," + e + ";";
                    actual += to_string(egf_column_coeff(n, k, r)) + ","
                        + to_string(central_L_entry(n, k, r, CentralEntryMethod::sumA)) + ","
                        + to_string(central_L_entry(n, k, r, CentralEntryMethod::sumB)) + ";";
                }
            return Outcome{expected, actual};
        });
        reg.add("first-column", rp(r), "first columns are T(2n,n,r) and c(n;r)", [=] {
            return Outcome{join(terms(Family::central, r, dim)) + "|" + join(terms(Family::catalan, r, dim)),
                           join(to_matrix(L_central(r, dim), dim).column(0)) + "|"
                               + join(to_matrix(L_catalan(r, dim), dim).column(0))};
        });
        reg.add("catalan-closed-form", rp(r), "the square-root form of the catalan factor equals the inverse form", [=] {
            return Outcome{lower_rows(to_matrix(L_catalan(r, dim), dim)),
                           lower_rows(to_matrix(L_catalan_closed(r, dim), dim))};
        });
    }
    reg.add("printed-L2-central", {}, "printed central factor for r = 2", [] {
        return Outcome{"1;3,1;13,6,1;63,33,9,1", lower_rows(to_matrix(L_central(2, 4), 4))};
    });
    reg.add("printed-L3-catalan", {}, "printed catalan factor for r = 3", [] {
        return Outcome{"1;3,1;12,7,1;57,43,11,1", lower_rows(to_matrix(L_catalan(3, 4), 4))};
    });
}

void add_production(Registry& reg, const Options& o)
{
    const std::size_t dim = std::max<std::size_t>(o.n_max, 2);
    for (long r = 1; r <= o.r_max; ++r) {
        reg.add("production-roundtrip", rp(r), "growing an array from its production matrix recovers it", [=] {
            std::string expected;
            std::string actual;
            for (const TriMatrix& a : {to_matrix(a_p(r, dim + 1), dim + 1), to_matrix(L_catalan(r, dim + 1), dim + 1),
                                       to_matrix(RiordanArray::binomial(dim + 1), dim + 1)}) {
                expected += lower_rows(a.leading(dim)) + "|";
                actual += lower_rows(matrix_from_production(production_matrix(a), dim)) + "|";
            }
            return Outcome{expected, actual};
        });
        reg.add("production-structure", rp(r), "the production matrix of A_P(r) is P(r)", [=] {
            return Outcome{full_rows(p_catalan(r, dim)), full_rows(production_matrix(to_matrix(a_p(r, dim + 1), dim + 1)))};
        });
        reg.add("stieltjes-bridge", rp(r), "A_P(r) B (1, x/r) is the catalan LDL factor", [=] {
            return Outcome{lower_rows(to_matrix(L_catalan(r, dim), dim)), lower_rows(stieltjes_bridge(r, dim))};
        });
        reg.add("u-equation", rp(r), "u = h/x solves u = A(xu) with A = (r-(r-1)x)/(1-x)", [=] {
            const std::size_t order = 12;
            const Series h = a_p(r, order).h().truncated(order);
            const Series column = Series::polynomial({ExactRat(r), ExactRat(-(r - 1))}, order)
                / Series::polynomial({1, -1}, order);
            return Outcome{join(h.shifted_down(1).coeffs()), join(series_compose(column, h).truncated(order - 1).coeffs())};
        });
    }
    reg.add("printed-production", {}, "printed P(1), P(2), A_P(1), A_P(2) and A_P(r) B", [] {
        return Outcome{"0,1,0;0,1,1;0,1,1|0,2,0;0,1,2;0,1,1|1;0,1;0,1,1;0,2,2,1|1;0,2;0,2,4;0,6,8,8|"
                       "1;1,1;2,3,1;5,9,5,1|1;2,2;6,10,4;22,46,32,8",
                       full_rows(p_catalan(1, 3)) + "|" + full_rows(p_catalan(2, 3)) + "|"
                           + lower_rows(to_matrix(a_p(1, 4), 4)) + "|" + lower_rows(to_matrix(a_p(2, 4), 4)) + "|"
                           + lower_rows(to_matrix(multiply(a_p(1, 4), RiordanArray::binomial(6)), 4)) + "|"
                           + lower_rows(to_matrix(multiply(a_p(2, 4), RiordanArray::binomial(6)), 4))};
    });
    reg.add("ap2-row-sums", {}, "row sums of A_P(2) are the large Schroeder numbers", [] {
        return Outcome{"1,2,6,22,90", join(hk::apply(a_p(2, 5).truncated(5), std::vector<ExactRat>(5, ExactRat(1))))};
    });
}

void add_berlekamp(Registry& reg, const Options& o)
{
    const std::size_t rows = std::max<std::size_t>(o.n_max, 4);
    const auto catalan = terms(Family::catalan, 1, 2 * rows);
    const BMTriangle t = bm_triangle(catalan, rows);
    for (std::size_t n = 0; n < rows; ++n)
        reg.add("catalan-bm-closed-form", {{"n", std::to_string(n)}},
                "Catalan B-M triangle term (-1)^(n-k)(C(n+k+1,2k)-C(0,n-k+1))", [=] {
                    std::vector<ExactInt> closed;
                    for (std::size_t k = 0; k <= n; ++k)
                        closed.push_back(catalan_bm_term(static_cast<long>(n), static_cast<long>(k)));
                    return Outcome{join(closed), join(t.rows[n])};
                });
    reg.add("printed-bm-c3", {}, "B-M solve, characteristic polynomial and companion matrix for c(n;3)", [] {
        const auto c3 = terms(Family::catalan, 3, 8);
        return Outcome{"-81,142,-75,15|81,-142,75,-15,1|0,0,0,-81;1,0,0,142;0,1,0,-75;0,0,1,15",
                       join(solve_bm(c3, 4)) + "|" + join(char_poly(c3, 4).coeffs) + "|"
                           + full_rows(companion_check(c3, 4))};
    });
    for (long r = 1; r <= o.r_max; ++r) {
        reg.add("bm-defining", rp(r), "each B-M row solves its Hankel system", [=] {
            const auto c = terms(Family::catalan, r, 2 * rows);
            const BMTriangle tri = bm_triangle(c, rows);
            std::string expected;
            std::string actual;
            for (std::size_t n = 0; n < rows; ++n) {
                const std::size_t d = n + 1;
                for (std::size_t m = 0; m < d; ++m) {
                    ExactRat s = 0;
                    for (std::size_t i = 0; i < d; ++i)
                        s += tri.rows[n][i] * ExactRat(c[m + i]);
                    expected += to_string(c[m + d]) + ",";
                    actual += to_string(s) + ",";
                }
            }
            return Outcome{expected, actual};
        });
        for (std::size_t d = 1; d <= 5; ++d)
            reg.add("companion-charpoly", {{"d", std::to_string(d)}, {"r", std::to_string(r)}},
                    "det(xI - companion) is the B-M characteristic polynomial", [=] {
                        const auto c = terms(Family::catalan, r, 2 * d);
                        return Outcome{join(char_poly(c, d).coeffs), join(faddeev_leverrier(companion_check(c, d)))};
                    });
        reg.add("coefficient-riordan", rp(r), "characteristic polynomials form (1/(1+rx), x/(1+(r+1)x+rx^2))", [=] {
            return Outcome{lower_rows(to_matrix(inverse(L_catalan(r, rows)), rows)),
                           lower_rows(coefficient_riordan_check(r, rows))};
        });
        reg.add("bm-gf", rp(r), "B-M triangle of c(n;r) expands (r(1+x)+xy)/((1-xy)(1+(r+1)x+rx^2-xy))", [=] {
            const auto tri = bm_triangle(terms(Family::catalan, r, 2 * rows), rows);
            std::string expected;
            for (const auto& row : tri.rows)
                expected += join(row) + ";";
            std::string actual;
            for (const auto& row : bm_gf_check(r, rows).rows)
                actual += join(row) + ";";
            return Outcome{expected, actual};
        });
    }
}

CheckResult execute(const Task& task)
{
    CheckResult res{task.id, task.ref, task.params, Status::fail, "", ""};
    try {
        auto [expected, actual] = task.run();
        res.status = expected == actual ? Status::pass : Status::fail;
        res.expected = std::move(expected);
        res.actual = std::move(actual);
    } catch (const std::exception& e) {
        res.expected = "no error";
        res.actual = e.what();
    }
    return res;
}

} // namespace

const std::vector<std::string>& scope_names()
{
    static const std::vector<std::string> names{"all", "series", "sequences", "riordan",
                                                "hankel", "production", "berlekamp"};
    return names;
}

Report run(const Options& options)
{
    if (options.r_max < 1)
        throw std::invalid_argument("--r-max must be at least 1");
    if (options.n_max < 1)
        throw std::invalid_argument("--n-max must be at least 1");
    std::set<std::string> scopes;
    for (const auto& s : options.scopes) {
        if (std::find(scope_names().begin(), scope_names().end(), s) == scope_names().end())
            throw std::invalid_argument("unknown scope '" + s + "'");
        scopes.insert(s);
    }
    const bool all = scopes.count("all") > 0;
    auto wants = [&](const char* name) { return all || scopes.count(name) > 0; };

    Registry reg;
    if (wants("series"))
        add_series(reg, options);
    if (wants("sequences"))
        add_sequences(reg, options);
    if (wants("riordan"))
        add_riordan(reg, options);
    if (wants("hankel"))
        add_hankel(reg, options);
    if (wants("production"))
        add_production(reg, options);
    if (wants("berlekamp"))
        add_berlekamp(reg, options);

    auto& tasks = reg.tasks();
    std::vector<CheckResult> results(tasks.size());
    if (options.parallel && tasks.size() > 1) {
        const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::future<void>> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < tasks.size(); i += workers)
                    results[i] = execute(tasks[i]);
            }));
        for (auto& f : pool)
            f.get();
    } else {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            results[i] = execute(tasks[i]);
    }

    std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    Report report;
    report.checks = std::move(results);
    for (const auto& c : report.checks)
        (c.status == Status::pass ? report.passed : report.failed) += 1;
    return report;
}

std::string to_json(const Report& report)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"id", c.id},
                          {"paper_ref", c.paper_ref},
                          {"params", c.params},
                          {"status", c.status == Status::pass ? "pass" : "fail"},
                          {"expected", c.expected},
                          {"actual", c.actual}});
    }
    nlohmann::json doc{{"checks", checks},
                       {"summary",
                        {{"total", std::to_string(report.checks.size())},
                         {"passed", std::to_string(report.passed)},
                         {"failed", std::to_string(report.failed)}}}};
    return doc.dump(2) + "\n";
}

} // namespace hk::verify
