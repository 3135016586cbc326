#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fpg/alexander/fox.hpp"
#include "fpg/errors.hpp"
#include "fpg/exact/bilaurent.hpp"
#include "fpg/exact/matrix.hpp"

namespace fpg {

/// Abelian grading: generator -> exponent vector over (t1, t2). One-variable
/// gradings leave the second component zero.
using Grading = std::vector<std::pair<long, long>>;

struct AlexanderGcds {
  Matrix<BiLaurentPolynomial> matrix;     // abelianized Fox matrix
  std::vector<BiLaurentPolynomial> gcds;  // d_k for k = 1..min(rows, cols)
  std::size_t rank = 0;                   // largest k with d_k != 0
  bool no_relators = false;

  /// d_rank: the first nonvanishing elementary ideal's gcd (1 for rank 0).
  BiLaurentPolynomial relevant() const { return rank == 0 ? BiLaurentPolynomial(1) : gcds[rank - 1]; }
};

inline BiLaurentPolynomial grade(const Word& w, const Grading& eps) {
  long a = 0, b = 0;
  for (Letter l : w.letters()) {
    a += letter_sign(l) * eps[letter_gen(l)].first;
    b += letter_sign(l) * eps[letter_gen(l)].second;
  }
  return BiLaurentPolynomial::monomial(1, a, b);
}

inline Matrix<BiLaurentPolynomial> abelianized_fox_matrix(const Presentation& p, const Grading& eps) {
  if (eps.size() != p.num_generators()) fail(ErrorCode::DimensionMismatch, "one grading per generator is required");
  for (const auto& r : p.relators()) {
    long a = 0, b = 0;
    for (Letter l : r.letters()) {
      a += letter_sign(l) * eps[letter_gen(l)].first;
      b += letter_sign(l) * eps[letter_gen(l)].second;
    }
    if (a != 0 || b != 0)
      fail(ErrorCode::InconsistentGrading, "relator " + p.word_string(r) + " has nonzero grading");
  }
  const FoxMatrix f = fox_matrix(p);
  Matrix<BiLaurentPolynomial> m(f.rows, f.cols);
  for (std::size_t i = 0; i < f.rows; ++i)
    for (std::size_t j = 0; j < f.cols; ++j) {
      BiLaurentPolynomial e;
      for (const auto& [w, c] : f(i, j).terms()) e += BiLaurentPolynomial(c) * grade(w, eps);
      m(i, j) = e;
    }
  return m;
}

/// alexander_poly_gcds: unit-normalized gcds d_k of the k x k minors of the
/// abelianized Fox matrix.
inline AlexanderGcds alexander_poly_gcds(const Presentation& p, const Grading& eps) {
  AlexanderGcds out;
  out.matrix = abelianized_fox_matrix(p, eps);
  out.no_relators = p.num_relators() == 0;
  const std::size_t top = std::min(out.matrix.rows(), out.matrix.cols());
  for (std::size_t k = 1; k <= top; ++k) {
    BiLaurentPolynomial d = unit_normalize(minor_gcd(out.matrix, k));
    if (!d.is_zero()) out.rank = k;
    out.gcds.push_back(std::move(d));
  }
  return out;
}

}  // namespace fpg
