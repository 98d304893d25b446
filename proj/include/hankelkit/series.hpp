#pragma once

#include "hankelkit/exact.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace hk {

/// Truncated univariate power series over the rationals.
///
/// A series of order N knows the coefficients of x^0 .. x^(N-1) exactly and
/// nothing beyond. Binary operations return a series whose order is the
/// minimum of the operand orders.
class Series {
public:
    Series() = default;

    /// Zero series of the given order.
    explicit Series(std::size_t order);

    /// Coefficients c[0..N-1]; order = c.size().
    explicit Series(std::vector<ExactRat> coeffs);

    /// Polynomial with the given coefficients, zero-padded (or truncated) to `order`.
    static Series polynomial(const std::vector<ExactRat>& coeffs, std::size_t order);
    static Series polynomial(std::initializer_list<long> coeffs, std::size_t order);

    static Series constant(const ExactRat& c, std::size_t order);
    static Series one(std::size_t order) { return constant(1, order); }

    /// The series x, truncated to `order`.
    static Series x(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size(); }
    const std::vector<ExactRat>& coeffs() const noexcept { return coeffs_; }

    const ExactRat& operator[](std::size_t i) const { return coeffs_[i]; }

    /// Coefficient of x^i, or zero for i beyond the order.
    ExactRat coeff(std::size_t i) const;

    Series truncated(std::size_t order) const;

    /// Multiply by x^k; the order is unchanged and the top k coefficients fall off.
    Series shifted_up(std::size_t k) const;

    /// Divide by x^k. The k lowest coefficients must be zero
    /// (Error(non_integer_result) otherwise); the order drops by k.
    Series shifted_down(std::size_t k) const;

    Series scaled(const ExactRat& c) const;

    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    Series& operator*=(const Series& other);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Series& b) { return a *= b; }
    friend Series operator-(const Series& a) { return a.scaled(-1); }

    /// Quotient q with q·b = a. Throws Error(zero_constant_divisor) when b(0) = 0.
    friend Series operator/(const Series& a, const Series& b);

    friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<ExactRat> coeffs_;
};

enum class RingOp { add, sub, mul };

Series series_ring(const Series& a, const Series& b, RingOp which);

Series series_div(const Series& a, const Series& b);

/// Square root with constant term +1. Throws Error(non_unit_constant) if a(0) != 1.
Series series_sqrt(const Series& a);

/// outer(inner(x)) by Horner's rule. Throws Error(nonzero_inner_constant) if inner(0) != 0.
Series series_compose(const Series& outer, const Series& inner);

/// Compositional inverse: h(revert(h)) = revert(h)(h) = x.
/// Throws Error(not_revertible) unless h(0) = 0 and h'(0) != 0.
Series series_revert(const Series& h);

/// Integer power.
Series series_pow(const Series& base, unsigned long exp);

} // namespace hk
