#pragma once

// Generators for the Pascal-like triangle T(n,k,r), its central coefficients,
// the generalized Catalan numbers c(n;r) and the sequences tied to their
// Hankel transforms. Every function is pure; r may be any integer unless
// stated otherwise, though the identities are only claimed for r >= 1.

#include "hankelkit/exact.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hk {

/// A named sequence a_0, a_1, ... with its parameter.
struct SeqVec {
    std::string name;
    ExactInt r;
    std::vector<ExactInt> terms;
};

/// Rows 0..N-1 of T(., ., r); row n has n+1 entries.
struct Triangle {
    ExactInt r;
    std::vector<std::vector<ExactInt>> rows;
};

/// T(n,k,r) = sum_j C(k,j) C(n-k,j) r^j. Throws Error(index_out_of_triangle) unless 0 <= k <= n.
ExactInt triangle_T(long n, long k, const ExactInt& r);
Triangle triangle(std::size_t rows, const ExactInt& r);

/// T(2n, n, r).
ExactInt central(std::size_t n, const ExactInt& r);

/// c(n;r) = T(2n,n,r) - T(2n,n+1,r).
ExactInt gen_catalan(std::size_t n, const ExactInt& r);

/// c(n;r) + c(n+1;r).
ExactInt catalan_sum(std::size_t n, const ExactInt& r);

/// Four independent routes to [x^n] (1-x)/(1-(r+2)x+rx^2).
enum class BMethod {
    gf,               ///< series expansion
    trig_sum,         ///< alternating C(n-k,k)(-r)^k(r+2)^(n-2k) difference
    binom_double_sum, ///< sum_k C(n,k) sum_j C(j,k-j) r^(2j-k)
    floor_double_sum, ///< sum_k C(n,k) sum_j C(k-j,j) r^(k-2j)
};

ExactInt b_seq(std::size_t n, const ExactInt& r, BMethod method = BMethod::gf);

/// [x^n] 1/(1 - r x - x^2).
ExactInt gen_pell(std::size_t n, const ExactInt& r);

enum class HankelKind { central, catalan, sum };

/// Closed-form Hankel transforms: 2^n r^C(n+1,2), r^C(n+1,2) and r^C(n+1,2) b_r(n+1).
/// Throws Error(unsupported_parameter) for r < 1.
ExactInt closed_ht(HankelKind kind, std::size_t n, const ExactInt& r);

/// 2^C(n+2,2) sum_k C(n+2,2k) 2^-k, evaluated exactly.
/// Throws Error(non_integer_result) if the value is not an integer.
ExactInt closed_ht_sum_r2_variant(std::size_t n);

/// n! [x^n] I_0(2 sqrt(r) x): C(2m,m) r^m at n = 2m, zero at odd n.
ExactInt bessel_moments(std::size_t n, const ExactInt& r);

/// [x^n] (1+3x-x^2-x^3)/(1-6x^2+x^4): 1, 3, 5, 17, 29, 99, ...
ExactInt interleaved_pell(std::size_t n);

/// interleaved_pell(n) * 4^floor(n^2/4): 1, 3, 20, 272, 7424, ...
ExactInt interleaved_pell_scaled(std::size_t n);

enum class Family { central, catalan, sum, b, pell, bessel, interleaved };

Family parse_family(const std::string& name);
std::string family_name(Family family);

/// First `count` terms of a family (interleaved ignores r).
SeqVec generate(Family family, const ExactInt& r, std::size_t count);

} // namespace hk
