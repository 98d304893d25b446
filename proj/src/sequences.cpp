#include "hankelkit/sequences.hpp"

#include "hankelkit/error.hpp"
#include "hankelkit/series.hpp"

#include <stdexcept>

namespace hk {

namespace {

// C(m, 2)
unsigned long choose2(std::size_t m)
{
    return m == 0 ? 0UL : static_cast<unsigned long>(m * (m - 1) / 2);
}

// r^e for a possibly negative e whose coefficient is known to vanish when e < 0.
ExactInt pow_or_zero(const ExactInt& base, long e)
{
    return e < 0 ? ExactInt(0) : ipow(base, static_cast<unsigned long>(e));
}

ExactInt series_term(const Series& num, const Series& den, std::size_t n)
{
    return to_int((num / den)[n]);
}

void require_positive(const ExactInt& r, const char* what)
{
    if (r < 1)
        throw Error(Errc::unsupported_parameter, std::string(what) + " needs r >= 1, got r = " + to_string(r));
}

} // namespace

ExactInt triangle_T(long n, long k, const ExactInt& r)
{
    if (k < 0 || k > n)
        throw Error(Errc::index_out_of_triangle,
                    "T(" + std::to_string(n) + "," + std::to_string(k) + ") is outside the triangle");
    ExactInt sum = 0;
    ExactInt rj = 1;
    for (long j = 0; j <= n - k; ++j) {
        sum += binomial(k, j) * binomial(n - k, j) * rj;
        rj *= r;
    }
    return sum;
}

Triangle triangle(std::size_t rows, const ExactInt& r)
{
    Triangle t{r, {}};
    for (std::size_t n = 0; n < rows; ++n) {
        std::vector<ExactInt> row;
        for (std::size_t k = 0; k <= n; ++k)
            row.push_back(triangle_T(static_cast<long>(n), static_cast<long>(k), r));
        t.rows.push_back(std::move(row));
    }
    return t;
}

ExactInt central(std::size_t n, const ExactInt& r)
{
    const long m = static_cast<long>(n);
    return triangle_T(2 * m, m, r);
}

ExactInt gen_catalan(std::size_t n, const ExactInt& r)
{
    const long m = static_cast<long>(n);
    // T(0, 1) lies outside the triangle and counts as zero
    const ExactInt right = m + 1 <= 2 * m ? triangle_T(2 * m, m + 1, r) : ExactInt(0);
    return triangle_T(2 * m, m, r) - right;
}

ExactInt catalan_sum(std::size_t n, const ExactInt& r)
{
    return gen_catalan(n, r) + gen_catalan(n + 1, r);
}

ExactInt b_seq(std::size_t n, const ExactInt& r, BMethod method)
{
    const long m = static_cast<long>(n);
    switch (method) {
    case BMethod::gf: {
        const std::size_t order = n + 1;
        std::vector<ExactRat> den{ExactRat(1), ExactRat(-(r + 2)), ExactRat(r)};
        return series_term(Series::polynomial({1, -1}, order), Series::polynomial(den, order), n);
    }
    case BMethod::trig_sum: {
        const ExactInt neg_r = -r;
        const ExactInt r2 = r + 2;
        ExactInt first = 0;
        for (long k = 0; k <= m / 2; ++k)
            first += binomial(m - k, k) * ipow(neg_r, static_cast<unsigned long>(k))
                * ipow(r2, static_cast<unsigned long>(m - 2 * k));
        ExactInt second = 0;
        for (long k = 0; 2 * k <= m - 1; ++k)
            second += binomial(m - k - 1, k) * ipow(neg_r, static_cast<unsigned long>(k))
                * ipow(r2, static_cast<unsigned long>(m - 2 * k - 1));
        return first - second;
    }
    case BMethod::binom_double_sum: {
        ExactInt sum = 0;
        for (long k = 0; k <= m; ++k) {
            ExactInt inner = 0;
            for (long j = 0; j <= k; ++j) {
                ExactInt c = binomial(j, k - j);
                if (c != 0)
                    inner += c * pow_or_zero(r, 2 * j - k);
            }
            sum += binomial(m, k) * inner;
        }
        return sum;
    }
    case BMethod::floor_double_sum: {
        ExactInt sum = 0;
        for (long k = 0; k <= m; ++k) {
            ExactInt inner = 0;
            for (long j = 0; j <= k / 2; ++j)
                inner += binomial(k - j, j) * ipow(r, static_cast<unsigned long>(k - 2 * j));
            sum += binomial(m, k) * inner;
        }
        return sum;
    }
    }
    throw std::logic_error("unknown BMethod");
}

ExactInt gen_pell(std::size_t n, const ExactInt& r)
{
    const std::size_t order = n + 1;
    std::vector<ExactRat> den{ExactRat(1), ExactRat(-r), ExactRat(-1)};
    return series_term(Series::one(order), Series::polynomial(den, order), n);
}

ExactInt closed_ht(HankelKind kind, std::size_t n, const ExactInt& r)
{
    require_positive(r, "closed-form Hankel transform");
    const ExactInt base = ipow(r, choose2(n + 1));
    switch (kind) {
    case HankelKind::central: return ipow(2, static_cast<unsigned long>(n)) * base;
    case HankelKind::catalan: return base;
    case HankelKind::sum: return base * b_seq(n + 1, r);
    }
    throw std::logic_error("unknown HankelKind");
}

ExactInt closed_ht_sum_r2_variant(std::size_t n)
{
    const long m = static_cast<long>(n) + 2;
    ExactRat sum = 0;
    const ExactRat half(1, 2);
    for (long k = 0; k <= m / 2; ++k)
        sum += ExactRat(binomial(m, 2 * k)) * rpow(half, static_cast<unsigned long>(k));
    ExactRat value = sum * ExactRat(ipow(2, choose2(n + 2)));
    if (!is_integral(value))
        throw Error(Errc::non_integer_result, "variant formula produced " + to_string(value));
    return value.get_num();
}

ExactInt bessel_moments(std::size_t n, const ExactInt& r)
{
    if (n % 2 != 0)
        return 0;
    const long m = static_cast<long>(n / 2);
    return binomial(2 * m, m) * ipow(r, static_cast<unsigned long>(m));
}

ExactInt interleaved_pell(std::size_t n)
{
    const std::size_t order = n + 1;
    return series_term(Series::polynomial({1, 3, -1, -1}, order), Series::polynomial({1, 0, -6, 0, 1}, order), n);
}

ExactInt interleaved_pell_scaled(std::size_t n)
{
    return interleaved_pell(n) * ipow(4, static_cast<unsigned long>(n * n / 4));
}

Family parse_family(const std::string& name)
{
    if (name == "central") return Family::central;
    if (name == "catalan") return Family::catalan;
    if (name == "sum") return Family::sum;
    if (name == "b") return Family::b;
    if (name == "pell") return Family::pell;
    if (name == "bessel") return Family::bessel;
    if (name == "interleaved") return Family::interleaved;
    throw std::invalid_argument("unknown sequence family '" + name + "'");
}

std::string family_name(Family family)
{
    switch (family) {
    case Family::central: return "central";
    case Family::catalan: return "catalan";
    case Family::sum: return "sum";
    case Family::b: return "b";
    case Family::pell: return "pell";
    case Family::bessel: return "bessel";
    case Family::interleaved: return "interleaved";
    }
    return "unknown";
}

SeqVec generate(Family family, const ExactInt& r, std::size_t count)
{
    SeqVec out{family_name(family), r, {}};
    out.terms.reserve(count);
    if (family == Family::b || family == Family::pell || family == Family::interleaved) {
        // one series expansion instead of count separate ones
        Series num = Series::one(count);
        Series den(count);
        if (family == Family::b) {
            num = Series::polynomial({1, -1}, count);
            den = Series::polynomial({ExactRat(1), ExactRat(-(r + 2)), ExactRat(r)}, count);
        } else if (family == Family::pell) {
            den = Series::polynomial({ExactRat(1), ExactRat(-r), ExactRat(-1)}, count);
        } else {
            num = Series::polynomial({1, 3, -1, -1}, count);
            den = Series::polynomial({1, 0, -6, 0, 1}, count);
        }
        out.terms = to_ints((num / den).coeffs());
        return out;
    }
    for (std::size_t n = 0; n < count; ++n) {
        switch (family) {
        case Family::central: out.terms.push_back(central(n, r)); break;
        case Family::catalan: out.terms.push_back(gen_catalan(n, r)); break;
        case Family::sum: out.terms.push_back(catalan_sum(n, r)); break;
        case Family::bessel: out.terms.push_back(bessel_moments(n, r)); break;
        default: break;
        }
    }
    return out;
}

} // namespace hk
