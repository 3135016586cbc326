#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/exact/laurent.hpp"
#include "fpg/exact/matrix.hpp"
#include "fpg/exact/number_field.hpp"
#include "fpg/exact/symbolic.hpp"
#include "fpg/groups/presentation.hpp"

namespace fpg {

using NFMatrix = Matrix<NumberFieldElement>;
using LaurentMatrix = Matrix<NFLaurent>;

/// Inverse over a field by Gauss–Jordan elimination.
template <class F>
Matrix<F> matrix_inverse(const Matrix<F>& a) {
  if (!a.is_square()) fail(ErrorCode::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<F> m = a, inv = Matrix<F>::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) fail(ErrorCode::NotInvertible, "singular matrix");
    m.swap_rows(c, p);
    inv.swap_rows(c, p);
    const F s = field_inverse(m(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) = s * m(c, j);
      inv(c, j) = s * inv(c, j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(m(i, c))) continue;
      const F f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

/// Generator -> invertible k x k matrix over a number field, plus the grading
/// eps: generator -> integer used for Phi(w) = t^eps(w) rho(w).
class Representation {
 public:
  Representation() = default;
  Representation(FieldPtr field, std::vector<NFMatrix> mats, std::vector<long> eps, std::string convention = "")
      : field_(std::move(field)), mats_(std::move(mats)), eps_(std::move(eps)), convention_(std::move(convention)) {
    if (mats_.size() != eps_.size()) fail(ErrorCode::DimensionMismatch, "one grading value per generator is required");
    degree_ = mats_.empty() ? 0 : mats_[0].rows();
    for (auto& m : mats_) {
      if (!m.is_square() || m.rows() != degree_)
        fail(ErrorCode::DimensionMismatch, "representation matrices must be square of equal size");
      for (std::size_t i = 0; i < degree_; ++i)
        for (std::size_t j = 0; j < degree_; ++j) m(i, j) = m(i, j).with_field(field_);
      invs_.push_back(matrix_inverse(m));
    }
  }

  const FieldPtr& field() const { return field_; }
  std::size_t degree() const { return degree_; }
  std::size_t num_generators() const { return mats_.size(); }
  const NFMatrix& matrix(std::size_t g) const { return mats_.at(g); }
  const std::vector<long>& eps() const { return eps_; }
  const std::string& convention() const { return convention_; }

  NFMatrix identity() const {
    NFMatrix id = NFMatrix::identity(degree_);
    for (std::size_t i = 0; i < degree_; ++i) id(i, i) = id(i, i).with_field(field_);
    return id;
  }

  NFMatrix rho(const Word& w) const {
    NFMatrix acc = identity();
    for (Letter l : w.letters()) {
      const std::size_t g = letter_gen(l);
      if (g >= mats_.size()) fail(ErrorCode::DimensionMismatch, "word uses a generator without a matrix");
      acc = acc * (letter_sign(l) > 0 ? mats_[g] : invs_[g]);
    }
    return acc;
  }

  long eps_of(const Word& w) const {
    long s = 0;
    for (Letter l : w.letters()) s += letter_sign(l) * eps_.at(letter_gen(l));
    return s;
  }

  /// Phi(w) = t^eps(w) rho(w) as a matrix over K[t, t^-1].
  LaurentMatrix phi(const Word& w) const { return lift(rho(w), eps_of(w)); }

  LaurentMatrix lift(const NFMatrix& m, long shift) const {
    LaurentMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = NFLaurent::monomial(m(i, j), shift);
    return out;
  }

 private:
  FieldPtr field_;
  std::size_t degree_ = 0;
  std::vector<NFMatrix> mats_, invs_;
  std::vector<long> eps_;
  std::string convention_;
};

struct RepresentationReport {
  bool ok = true;
  std::string failing_relator;  // empty when ok
  std::string reason;
  std::string convention;
};

/// verify_representation: every relator has eps-sum 0 and maps to the identity.
inline RepresentationReport verify_representation(const Presentation& p, const Representation& rho) {
  if (rho.num_generators() != p.num_generators())
    fail(ErrorCode::DimensionMismatch, "representation has " + std::to_string(rho.num_generators()) +
                                           " generators, presentation has " + std::to_string(p.num_generators()));
  RepresentationReport rep;
  rep.convention = rho.convention();
  for (const auto& r : p.relators()) {
    if (rho.eps_of(r) != 0) {
      rep.ok = false;
      rep.failing_relator = p.word_string(r);
      rep.reason = "grading sum " + std::to_string(rho.eps_of(r)) + " is not zero";
      return rep;
    }
    if (!(rho.rho(r) == rho.identity())) {
      rep.ok = false;
      rep.failing_relator = p.word_string(r);
      rep.reason = "matrix image is not the identity";
      return rep;
    }
  }
  return rep;
}

/// Representation whose entries are symbolic in xi and sqrt2; the sqrt2
/// convention is fixed when it is instantiated.
struct SymbolicRepresentation {
  FieldPtr field;
  std::vector<std::string> generators;  // order of the matrices
  std::vector<Matrix<SymbolicExpr>> matrices;
  std::vector<long> eps;
  // optional pin: Delta0 of a named generator must equal this polynomial
  std::optional<std::string> pin_generator;
  std::optional<SymbolicExpr> pin_delta0;

  bool uses_sqrt2() const {
    for (const auto& m : matrices)
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (m(i, j).uses(SymbolicExpr::Sqrt2)) return true;
    return false;
  }

  /// Instantiate for a presentation, matching generators by name.
  Representation instantiate(const Presentation& p, Sqrt2Convention c) const {
    const NumberFieldElement s = sqrt2_element(field, c);
    std::vector<NFMatrix> mats;
    std::vector<long> grading;
    for (const auto& name : p.generators()) {
      std::size_t k = 0;
      while (k < generators.size() && generators[k] != name) ++k;
      if (k == generators.size())
        fail(ErrorCode::DimensionMismatch, "representation has no matrix for generator '" + name + "'");
      const auto& sm = matrices[k];
      NFMatrix m(sm.rows(), sm.cols());
      for (std::size_t i = 0; i < sm.rows(); ++i)
        for (std::size_t j = 0; j < sm.cols(); ++j) m(i, j) = sm(i, j).evaluate_constant(field, s);
      mats.push_back(std::move(m));
      grading.push_back(eps[k]);
    }
    if (generators.size() != p.num_generators())
      fail(ErrorCode::DimensionMismatch, "representation and presentation have different generator counts");
    return Representation(field, std::move(mats), std::move(grading), to_string(c));
  }
};

/// Delta0 for generator g: det(Phi(x_g) - I).
inline NFLaurent delta0_of(const Representation& rho, std::size_t g) {
  LaurentMatrix m = rho.phi(Word::generator(g)) - rho.lift(rho.identity(), 0);
  return bareiss_determinant(m);
}

struct ConventionChoice {
  Representation rep;
  Sqrt2Convention convention = Sqrt2Convention::Primary;
  std::vector<std::string> log;          // one line per convention tried
  bool pinned_by_delta0 = false;         // the Delta0 pin decided the choice
  std::vector<Sqrt2Convention> passing;  // conventions passing verification
};

/// Try the primary sqrt2 convention, then the conjugate one; pick the first
/// that passes verification and (when present) the Delta0 pin. Fails with
/// RepresentationNotVerified when none does.
inline ConventionChoice select_convention(const Presentation& p, const SymbolicRepresentation& srep) {
  ConventionChoice out;
  std::optional<Sqrt2Convention> chosen;
  std::optional<Sqrt2Convention> verified_only;
  const std::vector<Sqrt2Convention> order = srep.uses_sqrt2() || srep.pin_delta0
                                                 ? std::vector<Sqrt2Convention>{Sqrt2Convention::Primary, Sqrt2Convention::Conjugate}
                                                 : std::vector<Sqrt2Convention>{Sqrt2Convention::Primary};
  for (auto c : order) {
    Representation r = srep.instantiate(p, c);
    const auto rep = verify_representation(p, r);
    std::string line = to_string(c) + ": ";
    if (!rep.ok) {
      out.log.push_back(line + "relator " + rep.failing_relator + " fails (" + rep.reason + ")");
      continue;
    }
    out.passing.push_back(c);
    if (!verified_only) verified_only = c;
    bool pin_ok = true;
    if (srep.pin_delta0) {
      const long g = p.find_generator(*srep.pin_generator);
      if (g < 0) fail(ErrorCode::UnknownGenerator, "pin refers to unknown generator " + *srep.pin_generator);
      const NFLaurent d0 = delta0_of(r, static_cast<std::size_t>(g));
      const NFLaurent want = srep.pin_delta0->evaluate(srep.field, sqrt2_element(srep.field, c));
      pin_ok = equal_up_to_unit(d0, want);
      line += pin_ok ? "relators verified, Delta0 pin holds" : "relators verified, Delta0 pin fails";
    } else {
      line += "relators verified";
    }
    out.log.push_back(line);
    if (pin_ok && !chosen) {
      chosen = c;
      out.rep = std::move(r);
    }
  }
  if (!chosen) fail(ErrorCode::RepresentationNotVerified, "no sqrt2 convention satisfies the relators and pins");
  out.convention = *chosen;
  out.pinned_by_delta0 = srep.pin_delta0.has_value() && out.passing.size() > 1;
  return out;
}

}  // namespace fpg
