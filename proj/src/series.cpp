#include "hankelkit/series.hpp"

#include "hankelkit/error.hpp"

#include <algorithm>

namespace hk {

Series::Series(std::size_t order) : coeffs_(order, ExactRat(0)) {}

Series::Series(std::vector<ExactRat> coeffs) : coeffs_(std::move(coeffs)) {}

Series Series::polynomial(const std::vector<ExactRat>& coeffs, std::size_t order)
{
    Series s(order);
    for (std::size_t i = 0; i < std::min(order, coeffs.size()); ++i)
        s.coeffs_[i] = coeffs[i];
    return s;
}

Series Series::polynomial(std::initializer_list<long> coeffs, std::size_t order)
{
    std::vector<ExactRat> c;
    for (long v : coeffs)
        c.emplace_back(v);
    return polynomial(c, order);
}

Series Series::constant(const ExactRat& c, std::size_t order)
{
    Series s(order);
    if (order > 0)
        s.coeffs_[0] = c;
    return s;
}

Series Series::x(std::size_t order)
{
    Series s(order);
    if (order > 1)
        s.coeffs_[1] = 1;
    return s;
}

ExactRat Series::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : ExactRat(0);
}

Series Series::truncated(std::size_t order) const
{
    return polynomial(coeffs_, std::min(order, this->order()));
}

Series Series::shifted_up(std::size_t k) const
{
    Series s(order());
    for (std::size_t i = k; i < order(); ++i)
        s.coeffs_[i] = coeffs_[i - k];
    return s;
}

Series Series::shifted_down(std::size_t k) const
{
    if (k > order())
        throw Error(Errc::insufficient_order, "cannot shift below order zero");
    for (std::size_t i = 0; i < k; ++i)
        if (coeffs_[i] != 0)
            throw Error(Errc::non_integer_result,
                        "division by x^" + std::to_string(k) + " leaves a negative power");
    return Series(std::vector<ExactRat>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

Series Series::scaled(const ExactRat& c) const
{
    Series s = *this;
    for (auto& v : s.coeffs_)
        v *= c;
    return s;
}

Series& Series::operator+=(const Series& other)
{
    coeffs_.resize(std::min(order(), other.order()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

Series& Series::operator-=(const Series& other)
{
    coeffs_.resize(std::min(order(), other.order()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    return *this;
}

Series& Series::operator*=(const Series& other)
{
    const std::size_t n = std::min(order(), other.order());
    std::vector<ExactRat> out(n, ExactRat(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    return *this;
}

Series operator/(const Series& a, const Series& b)
{
    const std::size_t n = std::min(a.order(), b.order());
    if (n > 0 && b.coeffs_[0] == 0)
        throw Error(Errc::zero_constant_divisor, "divisor has zero constant term");
    std::vector<ExactRat> q(n, ExactRat(0));
    for (std::size_t i = 0; i < n; ++i) {
        ExactRat acc = a.coeffs_[i];
        for (std::size_t j = 1; j <= i; ++j)
            acc -= b.coeffs_[j] * q[i - j];
        q[i] = acc / b.coeffs_[0];
    }
    return Series(std::move(q));
}

Series series_ring(const Series& a, const Series& b, RingOp which)
{
    switch (which) {
    case RingOp::add: return a + b;
    case RingOp::sub: return a - b;
    case RingOp::mul: return a * b;
    }
    return a;
}

Series series_div(const Series& a, const Series& b)
{
    return a / b;
}

Series series_sqrt(const Series& a)
{
    const std::size_t n = a.order();
    if (n == 0)
        return a;
    if (a[0] != 1)
        throw Error(Errc::non_unit_constant, "square root needs constant term 1, got " + to_string(a[0]));
    // s_0 = 1, 2 s_k = a_k - sum_{i=1}^{k-1} s_i s_{k-i}
    std::vector<ExactRat> s(n, ExactRat(0));
    s[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        ExactRat acc = a[k];
        for (std::size_t i = 1; i < k; ++i)
            acc -= s[i] * s[k - i];
        s[k] = acc / 2;
    }
    return Series(std::move(s));
}

Series series_compose(const Series& outer, const Series& inner)
{
    const std::size_t n = std::min(outer.order(), inner.order());
    if (inner.order() > 0 && inner[0] != 0)
        throw Error(Errc::nonzero_inner_constant, "inner series has nonzero constant term");
    if (n == 0)
        return Series(0);
    const Series in = inner.truncated(n);
    Series acc = Series::constant(outer[n - 1], n);
    for (std::size_t i = n - 1; i-- > 0;) {
        acc *= in;
        acc = acc + Series::constant(outer[i], n);
    }
    return acc;
}

Series series_revert(const Series& h)
{
    const std::size_t n = h.order();
    if (n < 2 || h[0] != 0 || h[1] == 0)
        throw Error(Errc::not_revertible, "reversion needs h(0) = 0 and h'(0) != 0");
    // Lagrange inversion: [x^k] g = (1/k) [x^(k-1)] (x / h)^k.
    const Series phi = Series::one(n - 1) / h.shifted_down(1);
    std::vector<ExactRat> g(n, ExactRat(0));
    Series power = Series::one(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        power *= phi;
        g[k] = power[k - 1] / static_cast<unsigned long>(k);
    }
    return Series(std::move(g));
}

Series series_pow(const Series& base, unsigned long exp)
{
    Series out = Series::one(base.order());
    for (unsigned long i = 0; i < exp; ++i)
        out *= base;
    return out;
}

} // namespace hk
