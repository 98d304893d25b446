#pragma once

#include "hankelkit/exact.hpp"
#include "hankelkit/matrix.hpp"
#include "hankelkit/riordan.hpp"

#include <cstddef>

namespace hk {

/// Production (Stieltjes) matrix: row_{n+1}(A) = row_n(A) · P.
using ProdMatrix = RatMatrix;

/// P of dimension N from an (N+1)x(N+1) lower-triangular A, as A_N^-1 · (rows 1..N of A).
/// Throws Error(singular_diagonal) on a zero diagonal entry of A.
ProdMatrix production_matrix(const TriMatrix& a);

/// Row 0 = r at column 1; row i >= 1 = ones in columns 1..i, r in column i+1.
ProdMatrix p_catalan(const ExactInt& r, std::size_t dim);

/// Row 0 = e_0 and row_{n+1} = row_n · P; P is zero-extended or truncated to dim.
TriMatrix matrix_from_production(const ProdMatrix& p, std::size_t dim);

/// A_P(r) = (1, x(1-x)/(r-(r-1)x))^-1 = (1, (1+(r-1)x-sqrt(Q))/2). Both forms are
/// built, and the matrix must also match the one grown from p_catalan(r);
/// any disagreement throws Error(identity_violation).
RiordanArray a_p(const ExactInt& r, std::size_t dim);

/// A_P(r) · B · (1, x/r) expanded to dim. Throws Error(unsupported_parameter) for r = 0.
TriMatrix stieltjes_bridge(const ExactInt& r, std::size_t dim);

} // namespace hk
