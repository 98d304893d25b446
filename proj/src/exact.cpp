#include "hankelkit/exact.hpp"

#include "hankelkit/error.hpp"

#include <cctype>

namespace hk {

ExactRat make_rat(const ExactInt& num, const ExactInt& den)
{
    if (den == 0)
        throw Error(Errc::dimension_mismatch, "zero denominator");
    ExactRat q(num, den);
    q.canonicalize();
    return q;
}

ExactInt binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    ExactInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

ExactInt factorial(unsigned long n)
{
    ExactInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

ExactInt ipow(const ExactInt& base, unsigned long exp)
{
    ExactInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

ExactRat rpow(const ExactRat& base, unsigned long exp)
{
    ExactRat out(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
    out.canonicalize();
    return out;
}

bool is_integral(const ExactRat& q)
{
    return q.get_den() == 1;
}

ExactInt to_int(const ExactRat& q)
{
    if (!is_integral(q))
        throw Error(Errc::integrality_violation, "expected an integer, got " + to_string(q));
    return q.get_num();
}

std::string to_string(const ExactInt& z)
{
    return z.get_str(10);
}

std::string to_string(const ExactRat& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

ExactInt parse_int(std::string_view text)
{
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size())
        throw std::invalid_argument("not an integer: '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("not an integer: '" + s + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    return ExactInt(s, 10);
}

ExactRat parse_rat(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return ExactRat(parse_int(text));
    ExactInt den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return make_rat(parse_int(text.substr(0, slash)), den);
}

std::vector<ExactRat> to_rats(const std::vector<ExactInt>& values)
{
    std::vector<ExactRat> out;
    out.reserve(values.size());
    for (const auto& v : values)
        out.emplace_back(v);
    return out;
}

std::vector<ExactInt> to_ints(const std::vector<ExactRat>& values)
{
    std::vector<ExactInt> out;
    out.reserve(values.size());
    for (const auto& v : values)
        out.push_back(to_int(v));
    return out;
}

} // namespace hk
