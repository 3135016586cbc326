#pragma once

#include <array>
#include <map>
#include <string>

#include "fpg/exact/integer.hpp"
#include "fpg/exact/laurent.hpp"
#include "fpg/exact/number_field.hpp"

namespace fpg {

/// Laurent polynomial in the symbols t, xi and sqrt2 with rational
/// coefficients, kept unevaluated so that the choice of sqrt2 inside the
/// number field can be made later. Key = (t, xi, sqrt2) exponents.
class SymbolicExpr {
 public:
  using Key = std::array<long, 3>;
  enum Symbol { T = 0, Xi = 1, Sqrt2 = 2 };

  SymbolicExpr() = default;
  SymbolicExpr(const Rational& c) {
    if (sgn(c) != 0) terms_[{0, 0, 0}] = c;
  }
  static SymbolicExpr symbol(Symbol s) {
    SymbolicExpr e;
    Key k{0, 0, 0};
    k[s] = 1;
    e.terms_[k] = 1;
    return e;
  }

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool uses(Symbol s) const {
    for (const auto& kv : terms_)
      if (kv.first[s] != 0) return true;
    return false;
  }
  /// Single-term expression that is a pure symbol power (for negative powers).
  bool is_monomial() const { return terms_.size() == 1; }

  SymbolicExpr operator-() const {
    SymbolicExpr r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
  }
  friend SymbolicExpr operator+(SymbolicExpr a, const SymbolicExpr& b) {
    for (const auto& [k, c] : b.terms_) a.add(k, c);
    return a;
  }
  friend SymbolicExpr operator-(const SymbolicExpr& a, const SymbolicExpr& b) { return a + (-b); }
  friend SymbolicExpr operator*(const SymbolicExpr& a, const SymbolicExpr& b) {
    SymbolicExpr r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
    return r;
  }
  /// Integer power; negative powers only for monomials.
  SymbolicExpr pow(long e) const {
    if (e < 0) {
      if (!is_monomial()) fail(ErrorCode::Parse, "negative power of a non-monomial expression");
      const auto& [k, c] = *terms_.begin();
      SymbolicExpr r;
      r.terms_[{-k[0] * (-e), -k[1] * (-e), -k[2] * (-e)}] = [&] {
        Rational inv = 1 / c, acc = 1;
        for (long i = 0; i < -e; ++i) acc *= inv;
        return acc;
      }();
      return r;
    }
    SymbolicExpr r(Rational(1));
    for (long i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  friend bool operator==(const SymbolicExpr& a, const SymbolicExpr& b) { return a.terms_ == b.terms_; }

  /// Evaluate in K[t, t^-1] for a number field K and a chosen sqrt2 in K.
  NFLaurent evaluate(const FieldPtr& field, const NumberFieldElement& sqrt2) const {
    NFLaurent out;
    const NumberFieldElement xi = NumberFieldElement::generator(field);
    for (const auto& [k, c] : terms_) {
      NumberFieldElement coeff = NumberFieldElement(c).with_field(field);
      if (k[1] != 0) coeff *= xi.pow(k[1]);
      if (k[2] != 0) coeff *= sqrt2.pow(k[2]);
      out += NFLaurent::monomial(coeff, k[0]);
    }
    return out;
  }

  /// Evaluate an expression free of t.
  NumberFieldElement evaluate_constant(const FieldPtr& field, const NumberFieldElement& sqrt2) const {
    if (uses(T)) fail(ErrorCode::Parse, "unexpected variable t in a constant expression");
    return evaluate(field, sqrt2).coeff(0).with_field(field);
  }

 private:
  void add(const Key& k, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  std::map<Key, Rational> terms_;
};

/// The two square roots of 2 in Q(xi)/(xi^4+1): xi^3 - xi and its negative.
enum class Sqrt2Convention { Primary, Conjugate };

inline std::string to_string(Sqrt2Convention c) {
  return c == Sqrt2Convention::Primary ? "sqrt2 = xi^3 - xi" : "sqrt2 = xi - xi^3";
}

inline NumberFieldElement sqrt2_element(const FieldPtr& field, Sqrt2Convention c) {
  const NumberFieldElement xi = NumberFieldElement::generator(field);
  const NumberFieldElement s = xi.pow(3) - xi;
  return c == Sqrt2Convention::Primary ? s : -s;
}

/// Render a number field element as "a + b*sqrt2" when it lies in Q(sqrt2),
/// otherwise as a polynomial in xi.
inline std::string render_with_sqrt2(const NumberFieldElement& v, const NumberFieldElement& sqrt2) {
  if (v.is_zero()) return "0";
  // v = a + b*s  <=>  v - a = b*s with a = constant coefficient
  const Rational a = v.coeff(0);
  const NumberFieldElement rest = v - NumberFieldElement(a);
  Rational b = 0;
  bool ok = true;
  if (!rest.is_zero()) {
    std::size_t idx = 0;
    while (sgn(sqrt2.coeff(idx)) == 0) ++idx;
    b = rest.coeff(idx) / sqrt2.coeff(idx);
    ok = (rest - NumberFieldElement(b) * sqrt2).is_zero();
  }
  if (!ok) return v.to_string();
  auto term = [](const Rational& q) {
    if (q == 1) return std::string("sqrt2");
    if (q == -1) return std::string("-sqrt2");
    return q.get_str() + "*sqrt2";
  };
  if (sgn(b) == 0) return a.get_str();
  if (sgn(a) == 0) return term(b);
  const std::string tb = term(abs(b));
  return a.get_str() + (sgn(b) < 0 ? " - " : " + ") + tb;
}

}  // namespace fpg
