#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/exact/integer.hpp"
#include "fpg/groups/orbifold.hpp"

namespace fpg {

/// Homotopy type (S^1 v ... v S^1) v (S^2 v ... v S^2), or in the cyclic case
/// (S^1 u_d e^2) v (S^2 v ... v S^2).
struct WedgeType {
  long circles = 0;
  long spheres = 0;
  bool cyclic = false;
  long order = 0;  // d in the cyclic case

  std::string to_string() const {
    std::string base = cyclic ? "S1 u_" + std::to_string(order) + " e2" : std::to_string(circles) + " circle(s)";
    return base + " wedge " + std::to_string(spheres) + " sphere(s)";
  }
};

/// wedge_homotopy_type: free mode s = 2 + r - chiD; cyclic mode s = 2 - chiD.
inline WedgeType wedge_homotopy_type(long r, long chi_d, std::optional<long> cyclic_order = std::nullopt) {
  WedgeType w;
  if (cyclic_order) {
    if (*cyclic_order < 1) fail(ErrorCode::InconsistentInput, "cyclic order must be positive");
    w.cyclic = true;
    w.order = *cyclic_order;
    w.spheres = 2 - chi_d;
  } else {
    if (r < 0) fail(ErrorCode::InconsistentInput, "number of circles must be nonnegative");
    w.circles = r;
    w.spheres = 2 + r - chi_d;
  }
  if (w.spheres < 0)
    fail(ErrorCode::InconsistentInput, "negative sphere count " + std::to_string(w.spheres) +
                                           ": the free/cyclic hypothesis cannot hold for this data");
  return w;
}

/// orbifold_kernel_rank: 1 - m chi^orb for a genus-0 orbifold with r+1
/// punctures and m = lcm of the cone orders.
inline long orbifold_kernel_rank(const OrbifoldSignature& sig, long m) {
  sig.validate();
  if (sig.genus != 0) fail(ErrorCode::InconsistentInput, "kernel rank formula needs genus 0");
  if (sig.punctures < 1) fail(ErrorCode::InconsistentInput, "kernel rank formula needs at least one puncture");
  long l = 1;
  for (long mi : sig.cone_orders) l = std::lcm(l, mi);
  if (l != m) fail(ErrorCode::BadLcm, "m = " + std::to_string(m) + " but lcm of cone orders is " + std::to_string(l));
  Rational rank = Rational(1) - Rational(m) * sig.orbifold_euler_characteristic();
  rank.canonicalize();
  if (rank.get_den() != 1) fail(ErrorCode::NotInteger, "1 - m chi^orb = " + rank.get_str() + " is not an integer");
  return rank.get_num().get_si();
}

}  // namespace fpg
