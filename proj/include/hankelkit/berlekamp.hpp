#pragma once

// Berlekamp-Massey triangles in their Hankel-system form: row n solves
//   H_{n+1} · g = (a_{n+1}, ..., a_{2n+1})^T
// where H_d is the d x d Hankel matrix of a.

#include "hankelkit/bivariate.hpp"
#include "hankelkit/error.hpp"
#include "hankelkit/exact.hpp"
#include "hankelkit/matrix.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hk {

struct BMTriangle {
    std::string source;
    std::vector<std::vector<ExactRat>> rows;
};

/// Monic x^d - sum_i g_{i+1} x^i, coefficients in ascending powers.
struct CharPoly {
    std::vector<ExactRat> coeffs;

    std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// Raised by bm_triangle when a row's system is singular; carries the rows solved so far.
class BMTriangleAborted : public Error {
public:
    BMTriangleAborted(const Error& cause, BMTriangle partial);

    const BMTriangle& partial() const noexcept { return partial_; }

private:
    BMTriangle partial_;
};

/// Exact solution of A·x = b by fraction-free elimination.
/// Throws Error(singular_system) if det A = 0.
std::vector<ExactRat> solve_exact(const IntMatrix& a, std::span<const ExactInt> b);

/// g with H_d · g = (a_d, ..., a_{2d-1})^T.
/// Throws Error(insufficient_terms) for fewer than 2d terms, Error(singular_system, d) if H_d is singular.
std::vector<ExactRat> solve_bm(std::span<const ExactInt> a, std::size_t d);

/// Rows n = 0..rows-1, row n = solve_bm(a, n+1). Throws BMTriangleAborted at the first singular row.
BMTriangle bm_triangle(std::span<const ExactInt> a, std::size_t rows, std::string source = {});

/// (-1)^(n-k) (C(n+k+1, 2k) - C(0, n-k+1)), the B-M triangle of the Catalan numbers.
ExactInt catalan_bm_term(long n, long k);

CharPoly char_poly(std::span<const ExactInt> a, std::size_t d);

/// H_d^-1 · H'_d with H'_d(i,j) = a_{i+j+1}. The result is checked to be the
/// companion matrix (sub-diagonal ones, last column = solve_bm(a, d));
/// Error(identity_violation) otherwise.
RatMatrix companion_check(std::span<const ExactInt> a, std::size_t d);

/// Rows d = 0..dim-1 hold char_poly(c(.;r), d); the matrix is checked against
/// (1/(1+rx), x/(1+(r+1)x+rx^2)) and returned.
TriMatrix coefficient_riordan_check(const ExactInt& r, std::size_t dim);

/// Expansion of (r(1+x)+xy)/((1-xy)(1+(r+1)x+rx^2-xy)), checked against
/// bm_triangle(c(.;r), rows) and returned.
BivariateTable bm_gf_check(const ExactInt& r, std::size_t rows);

} // namespace hk
