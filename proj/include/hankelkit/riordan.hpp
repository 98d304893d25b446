#pragma once

#include "hankelkit/exact.hpp"
#include "hankelkit/matrix.hpp"
#include "hankelkit/series.hpp"

#include <algorithm>
#include <cstddef>
#include <vector>

namespace hk {

/// Riordan array (d, h): column k of its matrix has generating function d·h^k.
///
/// Invariants: d(0) != 0, h(0) = 0, h'(0) != 0. The usable order is the
/// smaller of the two series orders.
class RiordanArray {
public:
    /// Throws Error(invalid_riordan_array) if the invariants do not hold.
    RiordanArray(Series d, Series h);

    static RiordanArray identity(std::size_t order);

    /// Binomial matrix (1/(1-x), x/(1-x)).
    static RiordanArray binomial(std::size_t order);

    const Series& d() const noexcept { return d_; }
    const Series& h() const noexcept { return h_; }
    std::size_t order() const noexcept { return std::min(d_.order(), h_.order()); }

    RiordanArray truncated(std::size_t order) const { return RiordanArray(d_.truncated(order), h_.truncated(order)); }

    friend bool operator==(const RiordanArray&, const RiordanArray&) = default;

private:
    Series d_;
    Series h_;
};

/// Entry (n, k) = [x^n] d(x) h(x)^k. Throws Error(insufficient_order) if dim > order.
TriMatrix to_matrix(const RiordanArray& array, std::size_t dim);

/// (d1 · (d2∘h1), h2∘h1); its matrix is the product of the two matrices.
RiordanArray multiply(const RiordanArray& lhs, const RiordanArray& rhs);

/// (1/(d∘hbar), hbar) with hbar the compositional inverse of h.
RiordanArray inverse(const RiordanArray& array);

/// Fundamental theorem: the sequence with gf d·(f∘h), f the gf of `input`.
/// Throws Error(insufficient_order) if the input is shorter than the array order.
std::vector<ExactRat> apply(const RiordanArray& array, const std::vector<ExactRat>& input);
std::vector<ExactRat> apply(const RiordanArray& array, const Series& input);

/// B^k; negative k goes through the inverse.
RiordanArray binomial_power(long k, std::size_t dim);

/// LDL factor of the Hankel matrix of T(2n,n,r). Built from the square-root
/// closed form and from the inverse of ((1-rx^2)/(1+(r+1)x+rx^2), x/(1+(r+1)x+rx^2));
/// the two must agree (Error(identity_violation) otherwise).
/// Throws Error(unsupported_parameter) for r = 0.
RiordanArray L_central(const ExactInt& r, std::size_t dim);

/// (1/(1+rx), x/(1+(r+1)x+rx^2))^-1, the LDL factor of the Hankel matrix of c(n;r).
RiordanArray L_catalan(const ExactInt& r, std::size_t dim);

/// (1/(1+rx), x/(1+(r+1)x+rx^2)); rows hold the orthogonal polynomial coefficients.
RiordanArray L_catalan_inverse(const ExactInt& r, std::size_t dim);

/// ((1-(r-1)x-sqrt(Q))/(2x), (1-(r+1)x-sqrt(Q))/(2rx)), Q = 1-2(r+1)x+(r-1)^2x^2.
/// Same matrix as L_catalan, built without any inversion.
RiordanArray L_catalan_closed(const ExactInt& r, std::size_t dim);

/// sqrt(1 - 2(r+1)x + (r-1)^2 x^2) to the given order.
Series central_radical(const ExactInt& r, std::size_t order);

enum class CentralEntryMethod { sumA, sumB };

/// Closed double-sum forms of the (n,k) entry of L_central(r).
ExactInt central_L_entry(long n, long k, const ExactInt& r, CentralEntryMethod method);

/// n! [x^n] e^((r+1)x) sum_j r^j x^(2j+k) / (j! (j+k)!), evaluated exactly.
ExactInt egf_column_coeff(long n, long k, const ExactInt& r);

/// numerator / (scale · x). The constant term of `numerator` must vanish
/// (Error(identity_violation) otherwise); the order drops by one.
Series shift_divide(const Series& numerator, const ExactRat& scale);

} // namespace hk
