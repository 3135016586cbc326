#pragma once

#include <cstddef>
#include <vector>

#include "fpg/exact/integer.hpp"
#include "fpg/exact/matrix.hpp"

namespace fpg {

/// Smith normal form U * A * V = D with U, V unimodular and each diagonal
/// entry dividing the next.
struct SmithForm {
  std::vector<Integer> diagonal;  // length min(rows, cols), nonnegative
  IntMatrix U, V, D;

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& d : diagonal)
      if (sgn(d) != 0) ++r;
    return r;
  }
};

namespace detail {

inline void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  // row dst -= q * row src
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (sgn(m(src, j)) != 0) m(dst, j) -= q * m(src, j);
}

inline void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (sgn(m(i, src)) != 0) m(i, dst) -= q * m(i, src);
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a, u = IntMatrix::identity(m), v = IntMatrix::identity(n);
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    // choose the nonzero entry of smallest magnitude as pivot
    auto place_min_pivot = [&]() -> bool {
      bool found = false;
      std::size_t bi = t, bj = t;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (sgn(d(i, j)) != 0 && (!found || abs(d(i, j)) < abs(d(bi, bj)))) {
            found = true;
            bi = i;
            bj = j;
          }
      if (!found) return false;
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      v.swap_cols(t, bj);
      return true;
    };
    if (!place_min_pivot()) break;

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        const Integer q = euclid_divmod(d(i, t), d(t, t)).first;
        detail::row_axpy(d, i, t, q);
        detail::row_axpy(u, i, t, q);
        dirty = dirty || sgn(d(i, t)) != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        const Integer q = euclid_divmod(d(t, j), d(t, t)).first;
        detail::col_axpy(d, j, t, q);
        detail::col_axpy(v, j, t, q);
        dirty = dirty || sgn(d(t, j)) != 0;
      }
      if (dirty) {
        // a smaller remainder appeared in row/column t: move it to the pivot
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < m; ++i)
          if (sgn(d(i, t)) != 0 && abs(d(i, t)) < abs(d(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t; j < n; ++j)
          if (sgn(d(t, j)) != 0 && abs(d(t, j)) < abs(d(bi, bj))) bi = t, bj = j;
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);
        continue;
      }
      // row and column are clear; enforce divisibility of the remaining block
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            detail::row_axpy(d, t, i, Integer(-1));
            detail::row_axpy(u, t, i, Integer(-1));
            fixed = true;
          }
      if (!fixed) break;
    }
    if (sgn(d(t, t)) < 0) {
      for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < m; ++j) u(t, j) = -u(t, j);
    }
  }

  SmithForm s;
  for (std::size_t k = 0; k < steps; ++k) s.diagonal.push_back(d(k, k));
  s.U = std::move(u);
  s.V = std::move(v);
  s.D = std::move(d);
  return s;
}

}  // namespace fpg
