// Dense matrices over GF(q) and exact elimination.

#ifndef LRC_MATRIX_HPP
#define LRC_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "lrc/gf.hpp"

namespace lrc {

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);
  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows);

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& data() const { return data_; }

  std::vector<Elem> column(std::size_t c) const;
  std::vector<std::vector<Elem>> to_rows() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  /// Columns `cols` of this matrix, in the given order.
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  Matrix vstack(const Matrix& below) const;
  /// M x for a column vector x.
  std::vector<Elem> apply(std::span<const Elem> x) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

/// Rank over GF(q).
std::size_t rank(const Matrix& m);

/// Reduced row-echelon form. Pivots are taken left to right; within a
/// column the topmost nonzero row below the current pivot row is used.
Matrix rref(const Matrix& m);

/// Same as rref, also reporting pivot columns.
Matrix rref(const Matrix& m, std::vector<std::size_t>& pivots);

/// Rows form the canonical basis of {x : M x = 0}, one row per free
/// column of rref(M) (that free coordinate set to 1).
Matrix null_space(const Matrix& m);

/// True iff the square minor on the given rows and columns is nonsingular.
bool submatrix_nonsingular(const Matrix& m, std::span<const std::size_t> row_idx,
                           std::span<const std::size_t> col_idx);

/// Hamming weight of a vector.
std::size_t weight(std::span<const Elem> v);

}  // namespace lrc

#endif  // LRC_MATRIX_HPP
