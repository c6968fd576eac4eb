#include "lrc/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrc {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (!field_) throw std::invalid_argument("matrix needs a field");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (!field_) throw std::invalid_argument("matrix needs a field");
  if (data_.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
  for (auto e : data_)
    if (e >= field_->q()) throw std::out_of_range("matrix entry outside the field");
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  std::vector<Elem> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(std::move(field), r, c, std::move(data));
}

std::vector<Elem> Matrix::column(std::size_t c) const {
  std::vector<Elem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<std::vector<Elem>> Matrix::to_rows() const {
  std::vector<std::vector<Elem>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (!field_->same_as(rhs.field())) throw FieldError("mismatched fields");
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shapes do not compose");
  const Field& f = *field_;
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out(i, j) = f.add(out(i, j), f.mul(a, rhs(k, j)));
    }
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw std::out_of_range("column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out(r, j) = (*this)(r, cols[j]);
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw std::out_of_range("row index out of range");
    std::copy(row(rows[i]).begin(), row(rows[i]).end(), out.row(i).begin());
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (cols_ != below.cols_) throw std::invalid_argument("vstack column mismatch");
  std::vector<Elem> data = data_;
  data.insert(data.end(), below.data_.begin(), below.data_.end());
  return Matrix(field_, rows_ + below.rows_, cols_, std::move(data));
}

std::vector<Elem> Matrix::apply(std::span<const Elem> x) const {
  if (x.size() != cols_) throw std::invalid_argument("vector length does not match columns");
  const Field& f = *field_;
  std::vector<Elem> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Elem acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc = f.add(acc, f.mul((*this)(r, c), x[c]));
    out[r] = acc;
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ &&
         (!field_ || !o.field_ || field_->same_as(*o.field_));
}

Matrix rref(const Matrix& m, std::vector<std::size_t>& pivots) {
  Matrix a = m;
  pivots.clear();
  if (a.rows() == 0) return a;
  const Field& f = a.field();
  std::size_t prow = 0;
  for (std::size_t c = 0; c < a.cols() && prow < a.rows(); ++c) {
    std::size_t sel = prow;
    while (sel < a.rows() && a(sel, c) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != prow) std::swap_ranges(a.row(sel).begin(), a.row(sel).end(), a.row(prow).begin());
    const Elem s = f.inv(a(prow, c));
    for (auto& e : a.row(prow)) e = f.mul(e, s);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == prow) continue;
      const Elem factor = a(r, c);
      if (factor == 0) continue;
      auto dst = a.row(r);
      auto src = a.row(prow);
      for (std::size_t j = c; j < a.cols(); ++j) dst[j] = f.sub(dst[j], f.mul(factor, src[j]));
    }
    pivots.push_back(c);
    ++prow;
  }
  return a;
}

Matrix rref(const Matrix& m) {
  std::vector<std::size_t> pivots;
  return rref(m, pivots);
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, pivots);
  return pivots.size();
}

Matrix null_space(const Matrix& m) {
  std::vector<std::size_t> pivots;
  const Matrix r = rref(m, pivots);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(m.field_ptr(), free_cols.size(), m.cols());
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    const std::size_t fc = free_cols[b];
    basis(b, fc) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(b, pivots[i]) = f.neg(r(i, fc));
  }
  return basis;
}

bool submatrix_nonsingular(const Matrix& m, std::span<const std::size_t> row_idx,
                           std::span<const std::size_t> col_idx) {
  if (row_idx.size() != col_idx.size())
    throw std::invalid_argument("minor needs equal row and column counts");
  const Matrix minor = m.select_rows(row_idx).select_columns(col_idx);
  return rank(minor) == row_idx.size();
}

std::size_t weight(std::span<const Elem> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

}  // namespace lrc
