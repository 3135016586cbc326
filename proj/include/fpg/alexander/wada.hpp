#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fpg/alexander/fox.hpp"
#include "fpg/alexander/representation.hpp"
#include "fpg/errors.hpp"
#include "fpg/exact/laurent.hpp"
#include "fpg/exact/matrix.hpp"

namespace fpg {

/// Block matrix (relators*k) x (generators*k) of Phi-images of Fox derivatives.
inline LaurentMatrix fox_image(const FoxMatrix& f, const Representation& rho) {
  const std::size_t k = rho.degree();
  LaurentMatrix out(f.rows * k, f.cols * k);
  for (std::size_t i = 0; i < f.rows; ++i)
    for (std::size_t j = 0; j < f.cols; ++j) {
      LaurentMatrix block(k, k);
      for (const auto& [w, c] : f(i, j).terms()) {
        const NFLaurent coeff(NumberFieldElement(Rational(c)).with_field(rho.field()));
        block = block + coeff * rho.phi(w);
      }
      out.set_block(i * k, j * k, block);
    }
  return out;
}

/// Phi(w) - I = sum_j Phi(dw/dx_j) (Phi(x_j) - I), checked exactly.
inline bool fox_identity_holds_under(const Word& w, const Representation& rho) {
  const std::size_t k = rho.degree();
  const LaurentMatrix id = rho.lift(rho.identity(), 0);
  LaurentMatrix rhs(k, k);
  for (std::size_t j = 0; j < rho.num_generators(); ++j) {
    FoxMatrix single{1, 1, {fox_derivative(w, j)}};
    rhs = rhs + fox_image(single, rho) * (rho.phi(Word::generator(j)) - id);
  }
  return rhs == rho.phi(w) - id;
}

/// Quotient a / b in K[t^+-1] when exact, otherwise kept as a fraction.
struct LaurentRatio {
  NFLaurent numerator, denominator;
  bool exact = false;
  NFLaurent quotient;  // valid when exact
};

inline LaurentRatio make_ratio(const NFLaurent& a, const NFLaurent& b) {
  LaurentRatio r;
  const NFLaurent g = laurent_gcd(a, b);
  r.numerator = unit_normalize(exact_div(a, g));
  r.denominator = unit_normalize(exact_div(b, g));
  r.exact = is_unit(r.denominator);
  if (r.exact) r.quotient = r.numerator;
  return r;
}

struct WadaResult {
  std::size_t deleted = 0;
  NFLaurent delta1;             // gcd of maximal minors after deleting the block
  NFLaurent delta0;             // det(Phi(x_deleted) - I)
  LaurentRatio wada;            // delta1 / delta0
  NFLaurent h1_order;           // order of the torsion of twisted H_1
  NFLaurent h0_order;           // order of the torsion of twisted H_0
  LaurentRatio delta;           // h1_order / h0_order: the twisted Alexander polynomial
  std::size_t minor_size = 0;
  std::vector<std::string> notes;
};

/// twisted_alexander_wada. `deleted` = nullopt selects the first generator
/// with nonzero Delta0.
inline WadaResult twisted_alexander_wada(const Presentation& p, const Representation& rho,
                                         std::optional<std::size_t> deleted = std::nullopt) {
  const auto report = verify_representation(p, rho);
  if (!report.ok)
    fail(ErrorCode::RepresentationNotVerified,
         "relator " + report.failing_relator + " is not respected: " + report.reason);
  const std::size_t k = rho.degree(), n = p.num_generators(), m = p.num_relators();
  if (n == 0) fail(ErrorCode::NoDeletableGenerator, "presentation has no generators");

  WadaResult res;
  std::optional<std::size_t> j;
  if (deleted) {
    if (*deleted >= n) fail(ErrorCode::UnknownGenerator, "deleted generator out of range");
    if (!delta0_of(rho, *deleted).is_zero()) j = *deleted;
  } else {
    for (std::size_t g = 0; g < n && !j; ++g)
      if (!delta0_of(rho, g).is_zero()) j = g;
  }
  if (!j) fail(ErrorCode::NoDeletableGenerator, "det(Phi(x) - I) vanishes for the requested generator(s)");
  res.deleted = *j;

  const FoxMatrix f = fox_matrix(p);
  const LaurentMatrix a = fox_image(f, rho);

  std::vector<std::size_t> drop;
  for (std::size_t c = 0; c < k; ++c) drop.push_back(*j * k + c);
  const LaurentMatrix a_del = a.without_columns(drop);
  res.minor_size = std::min(m, n - 1) * k;
  res.delta1 = unit_normalize(minor_gcd(a_del, res.minor_size));
  res.delta0 = unit_normalize(delta0_of(rho, *j));
  if (res.delta1.is_zero()) {
    res.notes.push_back("all maximal minors of the column-deleted matrix vanish");
    res.wada.numerator = res.delta1;
    res.wada.denominator = res.delta0;
  } else {
    res.wada = make_ratio(res.delta1, res.delta0);
  }

  // twisted chain complex C2 -> C1 -> C0 with d2 = a, d1 = stacked Phi(x_j) - I
  const LaurentMatrix id = rho.lift(rho.identity(), 0);
  LaurentMatrix d1(n * k, k);
  for (std::size_t g = 0; g < n; ++g) d1.set_block(g * k, 0, rho.phi(Word::generator(g)) - id);
  const std::size_t r2 = determinantal_rank(a);
  const std::size_t r1 = determinantal_rank(d1);
  res.h1_order = unit_normalize(minor_gcd(a, r2));
  res.h0_order = unit_normalize(minor_gcd(d1, r1));
  res.delta = make_ratio(res.h1_order, res.h0_order);
  res.notes.push_back("rank d2 = " + std::to_string(r2) + ", rank d1 = " + std::to_string(r1));
  return res;
}

}  // namespace fpg
