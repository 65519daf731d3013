#pragma once

#include <cstddef>
#include <vector>

#include "mckay/rational.hpp"

namespace mckay {

// Dense matrix over the rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Rational& s) const;
  bool operator==(const Matrix& rhs) const = default;

  bool is_zero() const;

  // Submatrix of rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }

  static Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows);
  static Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;                    // reduced row-echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// Gauss-Jordan elimination; pivots are taken left to right, top to bottom,
// so the result depends only on the input.
RowEchelon rref(Matrix m);

std::size_t rank(const Matrix& m);

// Columns form a basis of {x : m x = 0}, one per free column in increasing
// order, normalized to 1 in that free coordinate.
Matrix kernel(const Matrix& m);

// Rows form a basis of {y : y m = 0}.
Matrix left_kernel(const Matrix& m);

Rational determinant(Matrix m);

// Solves m x = b for square invertible m; throws DivisionByZero otherwise.
std::vector<Rational> solve(const Matrix& m, const std::vector<Rational>& b);

}  // namespace mckay
