#include "strdet/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace strdet {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::column(std::size_t c) const { return columns({c}); }

Matrix Matrix::columns(const std::vector<std::size_t>& which) const {
  Matrix m(rows_, which.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < which.size(); ++k) m(r, k) = (*this)(r, which[k]);
  return m;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
  if (left.rows_ != right.rows_) throw std::invalid_argument("hstack: row counts differ");
  Matrix m(left.rows_, left.cols_ + right.cols_);
  for (std::size_t r = 0; r < m.rows_; ++r) {
    for (std::size_t c = 0; c < left.cols_; ++c) m(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) m(r, left.cols_ + c) = right(r, c);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("vstack: column counts differ");
  Matrix m(top.rows_ + bottom.rows_, top.cols_);
  for (std::size_t c = 0; c < m.cols_; ++c) {
    for (std::size_t r = 0; r < top.rows_; ++r) m(r, c) = top(r, c);
    for (std::size_t r = 0; r < bottom.rows_; ++r) m(top.rows_ + r, c) = bottom(r, c);
  }
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (sgn(x) == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += x * b(k, c);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix m = a;
  for (auto& x : m.data_) x *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << " ";
      out << (*this)(r, c).get_str();
    }
  }
  out << "]";
  return out.str();
}

RowEchelon row_reduce(Matrix a) {
  RowEchelon result;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < a.rows() && sgn(a(r, c)) == 0) ++r;
    if (r == a.rows()) continue;
    if (r != pivot_row)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(r, k), a(pivot_row, k));
    const Scalar inv = 1 / a(pivot_row, c);
    for (std::size_t k = c; k < a.cols(); ++k) a(pivot_row, k) *= inv;
    for (std::size_t other = 0; other < a.rows(); ++other) {
      if (other == pivot_row || sgn(a(other, c)) == 0) continue;
      const Scalar factor = a(other, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(other, k) -= factor * a(pivot_row, k);
    }
    result.pivots.push_back(c);
    ++pivot_row;
  }
  result.reduced = std::move(a);
  return result;
}

std::size_t rank(const Matrix& a) { return row_reduce(a).pivots.size(); }

Matrix nullspace(const Matrix& a) {
  const RowEchelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, f);
  }
  return basis;
}

Matrix left_nullspace(const Matrix& a) { return nullspace(a.transpose()).transpose(); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row counts differ");
  const RowEchelon e = row_reduce(Matrix::hstack(a, b));
  const std::size_t n = a.cols();
  Matrix x(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const std::size_t p = e.pivots[r];
    if (p >= n) return std::nullopt;  // pivot in the right-hand side: inconsistent
    for (std::size_t c = 0; c < b.cols(); ++c) x(p, c) = e.reduced(r, n + c);
  }
  return x;
}

bool column_space_contains(const Matrix& a, const Matrix& b) {
  if (b.cols() == 0) return true;
  return rank(Matrix::hstack(a, b)) == rank(a);
}

}  // namespace strdet
