#pragma once

// Exact integers and rationals. Both are GMP-backed; mpq_class arithmetic
// always yields canonical values (den > 0, gcd(num, den) = 1), so equality
// is structural.

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hk {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

/// Normalized num/den. Throws hk::Error(dimension_mismatch) on a zero denominator.
ExactRat make_rat(const ExactInt& num, const ExactInt& den);

ExactInt binomial(long n, long k);
ExactInt factorial(unsigned long n);

/// base^exp with the 0^0 = 1 convention.
ExactInt ipow(const ExactInt& base, unsigned long exp);
ExactRat rpow(const ExactRat& base, unsigned long exp);

bool is_integral(const ExactRat& q);

/// Numerator of an integral rational; throws Error(integrality_violation) otherwise.
ExactInt to_int(const ExactRat& q);

std::string to_string(const ExactInt& z);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const ExactRat& q);

ExactInt parse_int(std::string_view text);
ExactRat parse_rat(std::string_view text);

std::vector<ExactRat> to_rats(const std::vector<ExactInt>& values);
std::vector<ExactInt> to_ints(const std::vector<ExactRat>& values);

} // namespace hk
