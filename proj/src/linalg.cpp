#include "mckay/linalg.hpp"

#include <utility>

#include "mckay/error.hpp"

namespace mckay {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) {
      throw Error(ErrorKind::Constraint, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorKind::Constraint, "matrix shape mismatch in product");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const Rational& b = rhs(k, c);
        if (sgn(b) != 0) out(r, c) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorKind::Constraint, "matrix shape mismatch in sum");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorKind::Constraint, "matrix shape mismatch in difference");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::Constraint, "block out of range");
  Matrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.cols() != 0 && p.rows() != rows) throw Error(ErrorKind::Constraint, "hstack row mismatch");
    cols += p.cols();
  }
  Matrix out(rows, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < p.rows(); ++r)
      for (std::size_t c = 0; c < p.cols(); ++c) out(r, off + c) = p(r, c);
    off += p.cols();
  }
  return out;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.rows() != 0 && p.cols() != cols) throw Error(ErrorKind::Constraint, "vstack column mismatch");
    rows += p.rows();
  }
  Matrix out(rows, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < p.rows(); ++r)
      for (std::size_t c = 0; c < p.cols(); ++c) out(off + r, c) = p(r, c);
    off += p.rows();
  }
  return out;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    while (piv < rows && sgn(m(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != lead)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(piv, k), m(lead, k));
    Rational inv = 1 / m(lead, c);
    for (std::size_t k = c; k < cols; ++k)
      if (sgn(m(lead, k)) != 0) m(lead, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (sgn(m(lead, k)) != 0) m(r, k) -= f * m(lead, k);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return rref(m).pivots.size();
}

Matrix kernel(const Matrix& m) {
  const std::size_t cols = m.cols();
  if (m.rows() == 0) return Matrix::identity(cols);
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix basis(cols, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis(free[f], f) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], f) = -e.reduced(r, free[f]);
  }
  return basis;
}

Matrix left_kernel(const Matrix& m) { return kernel(m.transpose()).transpose(); }

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::Constraint, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m(piv, c)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(piv, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    Rational inv = 1 / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

std::vector<Rational> solve(const Matrix& m, const std::vector<Rational>& b) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.size() != n) throw Error(ErrorKind::Constraint, "solve shape mismatch");
  Matrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
    throw Error(ErrorKind::DivisionByZero, "singular system");
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = e.reduced(r, n);
  return x;
}

}  // namespace mckay
