#pragma once

#include <cstddef>

#include "fpg/exact/smith.hpp"
#include "fpg/groups/presentation.hpp"

namespace fpg {

struct PresentationHomology {
  AbelianInvariants h1;
  AbelianInvariants h2;  // free: a 2-complex has no 3-cells
  long euler_characteristic = 0;
  std::size_t boundary_rank = 0;  // rank of d2
};

/// presentation_homology: cellular homology of the presentation 2-complex;
/// d2 is the exponent-sum matrix (the Fox matrix at the trivial character).
inline PresentationHomology presentation_homology(const Presentation& p) {
  PresentationHomology h;
  const IntMatrix d2 = exponent_matrix(p);
  h.h1 = cokernel_invariants(d2, p.num_generators());
  h.boundary_rank = p.num_relators() == 0 || p.num_generators() == 0 ? 0 : smith_normal_form(d2).rank();
  h.h2.free_rank = p.num_relators() - h.boundary_rank;
  h.euler_characteristic = p.euler_characteristic();
  return h;
}

}  // namespace fpg
