// Dense row-major matrices over an exact ring, plus integer specialisations.

#ifndef CRYSTCOH_MATRIX_HPP_
#define CRYSTCOH_MATRIX_HPP_

#include "integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystcoh {

/// Dense matrix over a commutative-enough ring R. R{} must be the zero element.
/// Empty shapes (0 rows or 0 columns) are legal and denote zero maps.
template<typename R>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, const R& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  R& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const R& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const std::vector<R>& data() const { return data_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix column(std::size_t c) const {
    Matrix v(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r)
      v(r, 0) = (*this)(r, c);
    return v;
  }

  /// Columns [first, first+count).
  Matrix columns(std::size_t first, std::size_t count) const {
    Matrix v(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < count; ++c)
        v(r, c) = (*this)(r, first + c);
    return v;
  }

  Matrix rows_range(std::size_t first, std::size_t count) const {
    Matrix v(count, cols_);
    for (std::size_t r = 0; r < count; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        v(r, c) = (*this)(first + r, c);
    return v;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r)
      std::swap((*this)(r, a), (*this)(r, b));
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

template<typename R>
Matrix<R> operator*(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product: shape mismatch");
  Matrix<R> p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const R& aik = a(i, k);
      if (aik == R{})
        continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        p(i, j) += aik * b(k, j);
    }
  return p;
}

template<typename R>
Matrix<R> operator+(Matrix<R> a, const Matrix<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      a(i, j) += b(i, j);
  return a;
}

template<typename R>
Matrix<R> operator-(Matrix<R> a, const Matrix<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      a(i, j) -= b(i, j);
  return a;
}

/// Block-diagonal sum.
template<typename R>
Matrix<R> block_diagonal(const Matrix<R>& a, const Matrix<R>& b) {
  Matrix<R> m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

using IntMatrix = Matrix<Int>;

IntMatrix identity_matrix(std::size_t n);
IntMatrix zero_matrix(std::size_t rows, std::size_t cols);
IntMatrix make_matrix(std::initializer_list<std::initializer_list<long>> rows);
IntMatrix make_matrix(const std::vector<std::vector<long>>& rows);
IntMatrix diagonal_matrix(const std::vector<Int>& diag);

bool is_zero(const IntMatrix& a);
bool is_identity(const IntMatrix& a);
IntMatrix negate(IntMatrix a);
IntMatrix power(const IntMatrix& a, std::size_t e);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& a);

/// Human-readable "[[a,b],[c,d]]".
std::string format_matrix(const IntMatrix& a);

} // namespace crystcoh

#endif
