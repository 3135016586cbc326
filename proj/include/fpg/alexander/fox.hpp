#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/groups/presentation.hpp"
#include "fpg/words/group_ring.hpp"

namespace fpg {

/// Fox derivative d w / d x_j, using d(uv) = du + u dv.
inline GroupRingElement fox_derivative(const Word& w, std::size_t j, std::size_t rank = 0) {
  if (rank > 0 && (j >= rank || w.span() > rank))
    fail(ErrorCode::UnknownGenerator, "Fox derivative with respect to a generator outside the rank");
  GroupRingElement d;
  Word prefix;
  for (Letter l : w.letters()) {
    if (letter_gen(l) == j) {
      if (letter_sign(l) > 0)
        d += GroupRingElement(prefix);
      else
        d -= GroupRingElement(prefix * Word({l}));
    }
    prefix *= Word({l});
  }
  return d;
}

/// Relator-by-generator matrix of Fox derivatives.
struct FoxMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<GroupRingElement> entries;  // row-major

  const GroupRingElement& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

/// Fundamental identity: sum_j (dw/dx_j)(x_j - 1) = w - 1 in Z[F].
inline bool fox_identity_holds(const Word& w, std::size_t rank) {
  GroupRingElement lhs;
  for (std::size_t j = 0; j < rank; ++j)
    lhs += fox_derivative(w, j) * (GroupRingElement(Word::generator(j)) - GroupRingElement(1));
  return lhs == GroupRingElement(w) - GroupRingElement(1);
}

inline FoxMatrix fox_matrix(const Presentation& p) {
  FoxMatrix m;
  m.rows = p.num_relators();
  m.cols = p.num_generators();
  for (const auto& r : p.relators()) {
    for (std::size_t j = 0; j < m.cols; ++j) m.entries.push_back(fox_derivative(r, j));
    if (!fox_identity_holds(r, m.cols))
      fail(ErrorCode::InconsistentInput, "Fox fundamental identity failed for " + p.word_string(r));
  }
  return m;
}

}  // namespace fpg
