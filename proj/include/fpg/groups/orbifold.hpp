#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/exact/integer.hpp"
#include "fpg/groups/presentation.hpp"

namespace fpg {

/// Genus, number of punctures and cone orders of an orbifold curve.
struct OrbifoldSignature {
  std::size_t genus = 0;
  std::size_t punctures = 0;
  std::vector<long> cone_orders;

  void validate() const {
    for (long m : cone_orders)
      if (m < 2) fail(ErrorCode::BadConeOrder, "cone order " + std::to_string(m) + " < 2");
  }

  /// chi^orb = 2 - 2g - #punctures - sum(1 - 1/m_i).
  Rational orbifold_euler_characteristic() const {
    Rational chi(2 - 2 * static_cast<long>(genus) - static_cast<long>(punctures));
    for (long m : cone_orders) chi -= Rational(1) - Rational(1, m);
    chi.canonicalize();
    return chi;
  }
};

/// Presentation of the orbifold fundamental group. Generators a_i, b_i (genus),
/// x_j (punctures), mu_k (cone points); relators mu_k^{m_k} and
/// mu_1...mu_s x_1...x_n = [a_1,b_1]...[a_g,b_g]. With at least one puncture
/// the product relation eliminates the last puncture generator, giving
/// F_{2g+n-1} * Z_{m_1} * ... * Z_{m_s}.
inline Presentation orbifold_presentation(const OrbifoldSignature& sig) {
  sig.validate();
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= sig.genus; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  const std::size_t kept_punctures = sig.punctures > 0 ? sig.punctures - 1 : 0;
  for (std::size_t j = 1; j <= kept_punctures; ++j) names.push_back("x" + std::to_string(j));
  const std::size_t cone_base = names.size();
  for (std::size_t k = 1; k <= sig.cone_orders.size(); ++k) names.push_back("mu" + std::to_string(k));

  std::vector<Word> rels;
  for (std::size_t k = 0; k < sig.cone_orders.size(); ++k)
    rels.push_back(Word::generator(cone_base + k).pow(sig.cone_orders[k]));
  if (sig.punctures == 0) {
    Word prod;
    for (std::size_t k = 0; k < sig.cone_orders.size(); ++k) prod *= Word::generator(cone_base + k);
    Word comms;
    for (std::size_t i = 0; i < sig.genus; ++i)
      comms *= commutator(Word::generator(2 * i), Word::generator(2 * i + 1));
    rels.push_back(prod * comms.inverse());
  }
  return Presentation(std::move(names), std::move(rels));
}

}  // namespace fpg
