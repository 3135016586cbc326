#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fpg/exact/integer.hpp"
#include "fpg/exact/univariate.hpp"

namespace fpg {

/// Laurent polynomial in two variables with integer coefficients. Used for
/// classical (abelianized) Alexander matrices; the one-variable case is the
/// sub-ring with t2-exponent 0.
class BiLaurentPolynomial {
 public:
  using Exponent = std::pair<long, long>;

  BiLaurentPolynomial() = default;
  BiLaurentPolynomial(int v) : BiLaurentPolynomial(Integer(v)) {}
  BiLaurentPolynomial(long v) : BiLaurentPolynomial(Integer(v)) {}
  BiLaurentPolynomial(const Integer& v) {
    if (sgn(v) != 0) terms_[{0, 0}] = v;
  }

  static BiLaurentPolynomial monomial(const Integer& c, long e1, long e2) {
    BiLaurentPolynomial p;
    if (sgn(c) != 0) p.terms_[{e1, e2}] = c;
    return p;
  }
  static BiLaurentPolynomial t1() { return monomial(1, 1, 0); }
  static BiLaurentPolynomial t2() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  Integer coeff(long e1, long e2) const {
    auto it = terms_.find({e1, e2});
    return it == terms_.end() ? Integer(0) : it->second;
  }
  bool uses_second_variable() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.second != 0; });
  }

  BiLaurentPolynomial operator-() const {
    BiLaurentPolynomial r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
  }
  BiLaurentPolynomial& operator+=(const BiLaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BiLaurentPolynomial& operator-=(const BiLaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend BiLaurentPolynomial operator+(BiLaurentPolynomial a, const BiLaurentPolynomial& b) { return a += b; }
  friend BiLaurentPolynomial operator-(BiLaurentPolynomial a, const BiLaurentPolynomial& b) { return a -= b; }
  friend BiLaurentPolynomial operator*(const BiLaurentPolynomial& a, const BiLaurentPolynomial& b) {
    BiLaurentPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return r;
  }
  BiLaurentPolynomial& operator*=(const BiLaurentPolynomial& o) { return *this = *this * o; }
  friend bool operator==(const BiLaurentPolynomial& a, const BiLaurentPolynomial& b) { return a.terms_ == b.terms_; }

  BiLaurentPolynomial shifted(long d1, long d2) const {
    BiLaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_[{e.first + d1, e.second + d2}] = c;
    return r;
  }

  /// Minimal exponents of each variable (0,0 for the zero polynomial).
  Exponent min_exponents() const {
    if (terms_.empty()) return {0, 0};
    long m1 = terms_.begin()->first.first, m2 = terms_.begin()->first.second;
    for (const auto& kv : terms_) {
      m1 = std::min(m1, kv.first.first);
      m2 = std::min(m2, kv.first.second);
    }
    return {m1, m2};
  }

  std::string to_string(const std::string& v1 = "t1", const std::string& v2 = "t2") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending total order (t2 exponent, then t1 exponent)
    std::vector<std::pair<Exponent, Integer>> items(terms_.begin(), terms_.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
      if (a.first.second != b.first.second) return a.first.second > b.first.second;
      return a.first.first > b.first.first;
    });
    for (const auto& [e, c] : items) {
      const bool neg = sgn(c) < 0;
      const Integer mag = abs(c);
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      std::string mono;
      auto var = [&](const std::string& name, long k) {
        if (k == 0) return;
        if (!mono.empty()) mono += "*";
        mono += name;
        if (k != 1) mono += "^" + std::to_string(k);
      };
      var(v1, e.first);
      var(v2, e.second);
      if (mono.empty())
        os << mag.get_str();
      else if (mag == 1)
        os << mono;
      else
        os << mag.get_str() << "*" << mono;
    }
    return os.str();
  }

 private:
  void add_term(const Exponent& e, const Integer& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  std::map<Exponent, Integer> terms_;
};

namespace detail {

using ZPoly = Poly<Integer>;
using ZZPoly = Poly<ZPoly>;

// Outer variable t2, inner t1; exponents must be nonnegative.
inline ZZPoly to_nested(const BiLaurentPolynomial& p) {
  long max2 = 0;
  for (const auto& kv : p.terms()) max2 = std::max(max2, kv.first.second);
  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(max2 + 1));
  for (const auto& [e, c] : p.terms()) {
    auto& row = rows[static_cast<std::size_t>(e.second)];
    if (row.size() <= static_cast<std::size_t>(e.first)) row.resize(static_cast<std::size_t>(e.first + 1));
    row[static_cast<std::size_t>(e.first)] = c;
  }
  std::vector<ZPoly> outer;
  outer.reserve(rows.size());
  for (auto& r : rows) outer.emplace_back(std::move(r));
  return ZZPoly(std::move(outer));
}

inline BiLaurentPolynomial from_nested(const ZZPoly& p) {
  BiLaurentPolynomial r;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    const auto& inner = p.coeffs()[j].coeffs();
    for (std::size_t i = 0; i < inner.size(); ++i)
      r += BiLaurentPolynomial::monomial(inner[i], static_cast<long>(i), static_cast<long>(j));
  }
  return r;
}

inline BiLaurentPolynomial strip_monomial(const BiLaurentPolynomial& p) {
  auto [m1, m2] = p.min_exponents();
  return p.shifted(-m1, -m2);
}

}  // namespace detail

inline bool is_zero(const BiLaurentPolynomial& p) { return p.is_zero(); }

/// Units of Z[t1^+-1, t2^+-1] are +-monomials.
inline bool is_unit(const BiLaurentPolynomial& p) {
  return p.terms().size() == 1 && abs(p.terms().begin()->second) == 1;
}

/// Unit over Q[t1^+-1, t2^+-1] (any nonzero monomial).
inline bool is_unit_over_q(const BiLaurentPolynomial& p) { return p.terms().size() == 1; }

/// Canonical associate: exponents shifted to minimum 0, positive leading
/// coefficient in (t2, t1) lexicographic order.
inline BiLaurentPolynomial unit_normalize(const BiLaurentPolynomial& p) {
  if (p.is_zero()) return p;
  return detail::from_nested(unit_normal(detail::to_nested(detail::strip_monomial(p))));
}

/// bilaurent_gcd by primitive-part recursion over Z[t1][t2].
inline BiLaurentPolynomial bilaurent_gcd(const BiLaurentPolynomial& a, const BiLaurentPolynomial& b) {
  if (a.is_zero()) return unit_normalize(b);
  if (b.is_zero()) return unit_normalize(a);
  auto fa = detail::to_nested(detail::strip_monomial(a));
  auto fb = detail::to_nested(detail::strip_monomial(b));
  return unit_normalize(detail::from_nested(ring_gcd(fa, fb)));
}

inline BiLaurentPolynomial ring_gcd(const BiLaurentPolynomial& a, const BiLaurentPolynomial& b) {
  return bilaurent_gcd(a, b);
}

/// Exact quotient in the Laurent ring; fails when b does not divide a.
inline BiLaurentPolynomial exact_div(const BiLaurentPolynomial& a, const BiLaurentPolynomial& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroInverse, "bivariate division by zero");
  if (a.is_zero()) return a;
  auto [a1, a2] = a.min_exponents();
  auto [b1, b2] = b.min_exponents();
  auto q = detail::from_nested(exact_div(detail::to_nested(a.shifted(-a1, -a2)),
                                         detail::to_nested(b.shifted(-b1, -b2))));
  return q.shifted(a1 - b1, a2 - b2);
}

inline std::string to_string(const BiLaurentPolynomial& p) { return p.to_string(); }

}  // namespace fpg
