#pragma once

#include "hankelkit/exact.hpp"
#include "hankelkit/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hk {

/// Square matrix with entry (i, j) = a_{i+j}.
class HankelMatrix {
public:
    /// Throws Error(insufficient_terms) if `source` has fewer than 2·dim - 1 terms.
    HankelMatrix(std::vector<ExactInt> source, std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<ExactInt>& source() const noexcept { return source_; }
    const ExactInt& operator()(std::size_t i, std::size_t j) const { return source_[i + j]; }

    IntMatrix to_int_matrix() const;
    RatMatrix to_rat_matrix() const;

private:
    std::vector<ExactInt> source_;
    std::size_t dim_;
};

HankelMatrix hankel_matrix(std::span<const ExactInt> a, std::size_t dim);

/// Fraction-free (Bareiss) determinant; every division is exact. Singular gives 0.
ExactInt bareiss_det(const IntMatrix& m);

/// H = L · diag(D) · L^T with L unit lower-triangular.
struct LDLDecomp {
    RatMatrix L;
    std::vector<ExactRat> D;

    RatMatrix reconstruct() const;

    /// Determinant of the leading (n+1)x(n+1) block: D[0] ··· D[n].
    ExactRat leading_minor(std::size_t n) const;
};

/// Exact LDL^T of a symmetric matrix without pivoting.
/// Throws Error(singular_leading_minor, k) when the k-th pivot is zero.
LDLDecomp ldl(const RatMatrix& symmetric);
LDLDecomp ldl(const HankelMatrix& h);

enum class DetCheck {
    both,         ///< LDL products and Bareiss at every order; disagreement throws
    ldl_spot,     ///< LDL products, Bareiss confirms every 4th order and the last
    ldl_only,
    bareiss_only, ///< no LDL; singular blocks yield 0 instead of an error
};

/// h_n = det of the (n+1)x(n+1) Hankel block, n = 0..count-1.
/// A disagreement between the two determinant paths throws Error(identity_violation).
std::vector<ExactInt> hankel_transform(std::span<const ExactInt> a, std::size_t count,
                                       DetCheck check = DetCheck::both);

/// b_n = sum_j C(n,j) a_j applied k times; k < 0 uses the signed inverse.
std::vector<ExactInt> binomial_transform(std::span<const ExactInt> a, long k);

} // namespace hk
