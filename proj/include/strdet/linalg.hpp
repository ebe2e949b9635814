#pragma once

// Dense matrices over the rationals with exact Gaussian elimination.
//
// Every matrix may have zero rows or zero columns; representations of thin
// modules are full of 0 x k blocks and all routines accept them.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace strdet {

using Scalar = mpq_class;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  Matrix columns(const std::vector<std::size_t>& which) const;

  // Stack side by side / on top of each other. Row (resp. column) counts must agree.
  static Matrix hstack(const Matrix& left, const Matrix& right);
  static Matrix vstack(const Matrix& top, const Matrix& bottom);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each non-zero row
};

RowEchelon row_reduce(Matrix a);

std::size_t rank(const Matrix& a);

// Columns form a basis of {x : a x = 0}; shape a.cols() x nullity.
Matrix nullspace(const Matrix& a);

// Rows form a basis of {y : y a = 0}; shape (a.rows() - rank) x a.rows().
Matrix left_nullspace(const Matrix& a);

// Some X with a X = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// True iff every column of b lies in the column space of a.
bool column_space_contains(const Matrix& a, const Matrix& b);

}  // namespace strdet
