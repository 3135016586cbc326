#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fpg/exact/integer.hpp"
#include "fpg/exact/number_field.hpp"

namespace fpg {

/// Univariate Laurent polynomial over a field F (Rational or NumberFieldElement).
/// Coefficient i of the storage is the coefficient of t^(low + i); both ends
/// of the storage are nonzero.
template <class F>
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(int v) : LaurentPolynomial(F(v)) {}
  LaurentPolynomial(long v) : LaurentPolynomial(F(v)) {}
  LaurentPolynomial(F a) {
    if (!fpg::is_zero(a)) c_.push_back(std::move(a));
  }
  LaurentPolynomial(long low, std::vector<F> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }

  static LaurentPolynomial monomial(F a, long exponent) { return LaurentPolynomial(exponent, {std::move(a)}); }
  static LaurentPolynomial variable() { return monomial(F(1), 1); }

  bool is_zero() const { return c_.empty(); }
  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
  long span() const { return c_.empty() ? -1 : static_cast<long>(c_.size()) - 1; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(long e) const {
    if (c_.empty() || e < low_ || e > high()) return F{};
    return c_[static_cast<std::size_t>(e - low_)];
  }
  const F& lead() const { return c_.back(); }
  const F& trail() const { return c_.front(); }

  LaurentPolynomial shifted(long k) const {
    LaurentPolynomial r = *this;
    if (!r.c_.empty()) r.low_ += k;
    return r;
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return accumulate(o, false); }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return accumulate(o, true); }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (fpg::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentPolynomial(a.low_ + b.low_, std::move(c));
  }
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.low_ == b.low_);
  }

  LaurentPolynomial scaled(const F& s) const {
    if (fpg::is_zero(s)) return {};
    LaurentPolynomial r = *this;
    for (auto& a : r.c_) a = s * a;
    return r;
  }

  LaurentPolynomial pow(unsigned n) const {
    LaurentPolynomial result(1), base = *this;
    while (n) {
      if (n & 1U) result *= base;
      base *= base;
      n >>= 1U;
    }
    return result;
  }

  /// Render with a coefficient printer; coefficients that print as sums are
  /// parenthesised.
  std::string to_string(const std::string& var = "t",
                        const std::function<std::string(const F&)>& coeff_str = nullptr) const {
    if (c_.empty()) return "0";
    auto render = [&](const F& a) { return coeff_str ? coeff_str(a) : fpg::to_string(a); };
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const F& a = c_[k];
      if (fpg::is_zero(a)) continue;
      const long e = low_ + static_cast<long>(k);
      std::string s = render(a);
      bool negative = !s.empty() && s[0] == '-';
      std::string mag = negative ? s.substr(1) : s;
      const bool compound = mag.find_first_of("+-") != std::string::npos;
      if (compound) {
        negative = false;
        mag = "(" + s + ")";
      }
      if (first)
        os << (negative ? "-" : "");
      else
        os << (negative ? " - " : " + ");
      first = false;
      if (e == 0) {
        os << mag;
        continue;
      }
      if (mag != "1") os << mag << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

 private:
  LaurentPolynomial& accumulate(const LaurentPolynomial& o, bool subtract) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = subtract ? -o : o;
      return *this;
    }
    const long lo = std::min(low_, o.low_);
    const long hi = std::max(high(), o.high());
    std::vector<F> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) c[static_cast<std::size_t>(low_ - lo) + i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      auto& slot = c[static_cast<std::size_t>(o.low_ - lo) + i];
      if (subtract)
        slot -= o.c_[i];
      else
        slot += o.c_[i];
    }
    low_ = lo;
    c_ = std::move(c);
    trim();
    return *this;
  }
  void trim() {
    while (!c_.empty() && fpg::is_zero(c_.back())) c_.pop_back();
    std::size_t k = 0;
    while (k < c_.size() && fpg::is_zero(c_[k])) ++k;
    if (k) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(k));
      low_ += static_cast<long>(k);
    }
    if (c_.empty()) low_ = 0;
  }

  long low_ = 0;
  std::vector<F> c_;
};

template <class F>
bool is_zero(const LaurentPolynomial<F>& p) {
  return p.is_zero();
}

/// Units of F[t, t^-1] are the nonzero monomials.
template <class F>
bool is_unit(const LaurentPolynomial<F>& p) {
  return p.coeffs().size() == 1;
}

/// Canonical associate: shift so the constant term is nonzero, then make monic.
template <class F>
LaurentPolynomial<F> unit_normalize(const LaurentPolynomial<F>& p) {
  if (p.is_zero()) return p;
  return p.shifted(-p.low()).scaled(field_inverse(p.lead()));
}

/// Unit u with u*p == unit_normalize(p).
template <class F>
LaurentPolynomial<F> unit_normal_factor(const LaurentPolynomial<F>& p) {
  if (p.is_zero()) return LaurentPolynomial<F>(1);
  return LaurentPolynomial<F>::monomial(field_inverse(p.lead()), -p.low());
}

template <class F>
LaurentPolynomial<F> unit_inverse(const LaurentPolynomial<F>& u) {
  if (!is_unit(u)) fail(ErrorCode::NotInvertible, "Laurent polynomial is not a unit");
  return LaurentPolynomial<F>::monomial(field_inverse(u.lead()), -u.low());
}

/// Euclidean division in F[t, t^-1] with the span (high - low) as norm.
template <class F>
std::pair<LaurentPolynomial<F>, LaurentPolynomial<F>> euclid_divmod(const LaurentPolynomial<F>& a,
                                                                    const LaurentPolynomial<F>& b) {
  using L = LaurentPolynomial<F>;
  if (b.is_zero()) fail(ErrorCode::ZeroInverse, "Laurent division by zero");
  if (a.is_zero()) return {L{}, L{}};
  const long a_low = a.low(), b_low = b.low();
  std::vector<F> r(a.coeffs());
  const auto& bc = b.coeffs();
  const long db = static_cast<long>(bc.size()) - 1;
  const long da = static_cast<long>(r.size()) - 1;
  if (da < db) return {L{}, a};
  std::vector<F> q(static_cast<std::size_t>(da - db + 1));
  const F inv_lead = field_inverse(bc.back());
  for (long k = da; k >= db; --k) {
    const F c = r[static_cast<std::size_t>(k)] * inv_lead;
    if (fpg::is_zero(c)) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (long i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= c * bc[static_cast<std::size_t>(i)];
  }
  return {L(a_low - b_low, std::move(q)), L(a_low, std::move(r))};
}

template <class F>
long euclid_norm(const LaurentPolynomial<F>& a) {
  return a.span();
}

/// Exact quotient; fails when b does not divide a.
template <class F>
LaurentPolynomial<F> exact_div(const LaurentPolynomial<F>& a, const LaurentPolynomial<F>& b) {
  auto [q, r] = euclid_divmod(a, b);
  if (!r.is_zero()) fail(ErrorCode::NotInvertible, "inexact Laurent division");
  return q;
}

template <class F>
bool divides(const LaurentPolynomial<F>& d, const LaurentPolynomial<F>& a) {
  if (d.is_zero()) return a.is_zero();
  return euclid_divmod(a, d).second.is_zero();
}

/// laurent_gcd: unit-normalized gcd; gcd(0, 0) = 0.
template <class F>
LaurentPolynomial<F> laurent_gcd(LaurentPolynomial<F> a, LaurentPolynomial<F> b) {
  while (!b.is_zero()) {
    auto r = euclid_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return unit_normalize(a);
}

template <class F>
LaurentPolynomial<F> ring_gcd(const LaurentPolynomial<F>& a, const LaurentPolynomial<F>& b) {
  return laurent_gcd(a, b);
}

template <class F>
bool equal_up_to_unit(const LaurentPolynomial<F>& a, const LaurentPolynomial<F>& b) {
  return unit_normalize(a) == unit_normalize(b);
}

template <class F>
std::string to_string(const LaurentPolynomial<F>& p) {
  return p.to_string();
}

using QLaurent = LaurentPolynomial<Rational>;
using NFLaurent = LaurentPolynomial<NumberFieldElement>;

}  // namespace fpg
