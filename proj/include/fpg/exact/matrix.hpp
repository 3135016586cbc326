#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/exact/integer.hpp"

namespace fpg {

/// Dense row-major matrix over a commutative ring T.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) fail(ErrorCode::DimensionMismatch, "ragged matrix literal");
      for (const auto& v : row) a_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix m(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
    return m;
  }

  /// Copy of this matrix without the given columns.
  Matrix without_columns(const std::vector<std::size_t>& drop) const {
    std::vector<std::size_t> rs, cs;
    for (std::size_t i = 0; i < rows_; ++i) rs.push_back(i);
    for (std::size_t j = 0; j < cols_; ++j) {
      bool dropped = false;
      for (auto d : drop) dropped = dropped || d == j;
      if (!dropped) cs.push_back(j);
    }
    return submatrix(rs, cs);
  }

  /// Place `block` with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const Matrix& block) {
    for (std::size_t i = 0; i < block.rows(); ++i)
      for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r + i, c + j) = block(i, j);
  }

  Matrix transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product dimensions");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
      }
    return m;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum dimensions");
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += b.a_[k];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix difference dimensions");
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] -= b.a_[k];
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.a_) x = s * x;
    return a;
  }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!((*this)(i, j) == T(i == j ? 1 : 0))) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Integer>;

/// Fraction-free Gaussian elimination (Bareiss). Every division is exact, so
/// any integral domain with exact_div works.
template <class T>
T bareiss_determinant(Matrix<T> m) {
  if (!m.is_square()) fail(ErrorCode::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  bool negate = false;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m(p, k))) ++p;
      if (p == n) return T(0);
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = exact_div(num, prev);
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? T(-det) : det;
}

/// Laplace expansion along the first row; reference implementation for tests.
template <class T>
T cofactor_determinant(const Matrix<T>& m) {
  if (!m.is_square()) fail(ErrorCode::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T total(0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> rs, cs;
    for (std::size_t i = 1; i < n; ++i) rs.push_back(i);
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cs.push_back(c);
    T term = m(0, j) * cofactor_determinant(m.submatrix(rs, cs));
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

/// Advance `idx` (strictly increasing, values < n) to the next k-subset in
/// lexicographic order; false when exhausted.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

/// gcd of all k x k minors (0 when they all vanish; 1 for k = 0). Row and
/// column subsets are visited in lexicographic order, stopping as soon as the
/// running gcd is a unit.
template <class T>
T minor_gcd(const Matrix<T>& m, std::size_t k) {
  if (k > m.rows() || k > m.cols())
    fail(ErrorCode::BadMinorSize, "minor size " + std::to_string(k) + " exceeds matrix dimensions");
  if (k == 0) return T(1);
  T g(0);
  auto rs = first_combination(k);
  do {
    auto cs = first_combination(k);
    do {
      T d = bareiss_determinant(m.submatrix(rs, cs));
      if (is_zero(d)) continue;
      g = ring_gcd(g, d);
      if (is_unit(g)) return g;
    } while (next_combination(cs, m.cols()));
  } while (next_combination(rs, m.rows()));
  return g;
}

/// Rank over the fraction field by fraction-free elimination with column
/// skipping (each entry stays a minor of the input, so divisions are exact).
template <class T>
std::size_t determinantal_rank(Matrix<T> m) {
  std::size_t r = 0;
  T prev(1);
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) m(i, j) = exact_div(m(r, c) * m(i, j) - m(i, c) * m(r, j), prev);
      m(i, c) = T(0);
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace fpg
