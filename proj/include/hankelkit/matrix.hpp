#pragma once

#include "hankelkit/error.hpp"
#include "hankelkit/exact.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace hk {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    /// Rows may be ragged; missing trailing entries are zero.
    Matrix(std::initializer_list<std::initializer_list<T>> rows)
    {
        rows_ = rows.size();
        for (const auto& r : rows)
            cols_ = std::max(cols_, r.size());
        data_.assign(rows_ * cols_, T(0));
        std::size_t i = 0;
        for (const auto& r : rows) {
            std::size_t j = 0;
            for (const auto& v : r)
                (*this)(i, j++) = v;
            ++i;
        }
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    std::vector<T> column(std::size_t j) const
    {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            out.push_back((*this)(i, j));
        return out;
    }

    /// Row i restricted to columns 0..i (the lower-triangular part).
    std::vector<T> lower_row(std::size_t i) const
    {
        auto r = row(i);
        r.resize(std::min(i + 1, cols_));
        return r;
    }

    Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const
    {
        Matrix out(nrows, ncols);
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < ncols; ++j)
                out(i, j) = (*this)(row0 + i, col0 + j);
        return out;
    }

    Matrix leading(std::size_t n) const { return block(0, 0, n, n); }

    Matrix transpose() const
    {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = (*this)(i, j);
        return out;
    }

    bool is_lower_triangular() const
    {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != 0)
                    return false;
        return true;
    }

    bool is_diagonal() const
    {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && (*this)(i, j) != 0)
                    return false;
        return true;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw Error(Errc::dimension_mismatch, "matrix product of incompatible shapes");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<ExactInt>;
using RatMatrix = Matrix<ExactRat>;

/// Lower-triangular rational matrix; entry (n, k) = 0 for k > n.
using TriMatrix = RatMatrix;

RatMatrix to_rat(const IntMatrix& m);

/// Throws Error(integrality_violation) on any non-integer entry.
IntMatrix to_int(const RatMatrix& m);

/// Solve L·X = B for lower-triangular L by forward substitution.
/// Throws Error(singular_diagonal) on a zero diagonal entry.
RatMatrix solve_lower(const RatMatrix& lower, const RatMatrix& rhs);

/// Inverse of a lower-triangular matrix.
RatMatrix invert_lower(const RatMatrix& lower);

RatMatrix diagonal(const std::vector<ExactRat>& values);

} // namespace hk
