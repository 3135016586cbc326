#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/groups/presentation.hpp"
#include "fpg/words/braid.hpp"

namespace fpg {

/// zvk_presentation: generators x1..xn, relators x_i^-1 beta_j(x_i) for every
/// braid and every strand (all n per braid; trivial relators dropped).
inline Presentation zvk_presentation(std::size_t strands, const std::vector<BraidWord>& braids) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= strands; ++i) names.push_back("x" + std::to_string(i));
  std::vector<Word> rels;
  for (const auto& b : braids) {
    if (b.strands != strands)
      fail(ErrorCode::StrandMismatch, "braid on " + std::to_string(b.strands) + " strands, expected " + std::to_string(strands));
    const FreeEndomorphism a = artin_automorphism(b);
    for (std::size_t i = 0; i < strands; ++i) {
      Word r = Word::generator(i).inverse() * a.image(i);
      if (!r.cyclically_reduced().empty()) rels.push_back(r);
    }
  }
  return Presentation(std::move(names), std::move(rels));
}

}  // namespace fpg
