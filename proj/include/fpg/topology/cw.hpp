#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/groups/presentation.hpp"
#include "fpg/words/endomorphism.hpp"

namespace fpg {

/// Loops gamma_1..gamma_r around the atypical fibers and the monodromy of
/// each on the fiber free group of rank m.
struct MonodromyData {
  std::size_t loops = 0;
  std::size_t fiber_rank = 0;
  std::vector<FreeEndomorphism> monodromies;
};

/// cw_fibration_presentation: generators gamma_1..gamma_r, x_1..x_m and the
/// r*m relators R_{k,i} = gamma_k^-1 x_i gamma_k M_k(x_i)^-1 (k outer, i inner).
inline Presentation cw_fibration_presentation(const MonodromyData& d) {
  if (d.monodromies.size() != d.loops)
    fail(ErrorCode::RankMismatch, "expected " + std::to_string(d.loops) + " monodromies, got " +
                                      std::to_string(d.monodromies.size()));
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= d.loops; ++k) names.push_back("g" + std::to_string(k));
  for (std::size_t i = 1; i <= d.fiber_rank; ++i) names.push_back("x" + std::to_string(i));
  std::vector<Word> rels;
  for (std::size_t k = 0; k < d.loops; ++k) {
    const FreeEndomorphism& mk = d.monodromies[k];
    if (mk.rank() != d.fiber_rank)
      fail(ErrorCode::RankMismatch, "monodromy " + std::to_string(k + 1) + " has rank " + std::to_string(mk.rank()));
    const Word gk = Word::generator(k);
    for (std::size_t i = 0; i < d.fiber_rank; ++i) {
      // fiber generator i sits at index loops + i
      Word image;
      for (Letter l : mk.image(i).letters()) image *= Word::generator(d.loops + letter_gen(l), letter_sign(l));
      rels.push_back(gk.inverse() * Word::generator(d.loops + i) * gk * image.inverse());
    }
  }
  return Presentation(std::move(names), std::move(rels));
}

}  // namespace fpg
