#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "fpg/exact/integer.hpp"

namespace fpg {

/// Dense univariate polynomial over a commutative ring R, coefficients stored
/// from degree 0 upwards with no trailing zeros. R{} must be the zero of R.
template <class R>
class Poly;
template <class R>
bool is_zero(const Poly<R>& p);

template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(R a) { return Poly(std::vector<R>{std::move(a)}); }
  static Poly monomial(R a, std::size_t degree) {
    std::vector<R> c(degree + 1);
    c[degree] = std::move(a);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& lead() const { return c_.back(); }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R{}; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (fpg::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend Poly operator*(const R& s, const Poly& p) {
    std::vector<R> c = p.c_;
    for (auto& a : c) a = s * a;
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && fpg::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}

template <class R>
int leading_sign(const Poly<R>& p) {
  return p.is_zero() ? 0 : leading_sign(p.lead());
}

template <class R>
bool is_unit(const Poly<R>& p) {
  return p.degree() == 0 && is_unit(p.lead());
}

/// Canonical associate for Z-towers (units are +-1).
template <class R>
Poly<R> unit_normal(const Poly<R>& p) {
  return leading_sign(p) < 0 ? -p : p;
}

/// Division with remainder over a field of coefficients.
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroInverse, "polynomial division by zero");
  std::vector<F> r = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {Poly<F>{}, a};
  std::vector<F> q(static_cast<std::size_t>(a.degree() - db + 1));
  const F inv_lead = field_inverse(b.lead());
  for (long k = a.degree(); k >= db; --k) {
    const F c = r[static_cast<std::size_t>(k)] * inv_lead;
    if (is_zero(c)) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (long i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= c * b.coeffs()[static_cast<std::size_t>(i)];
  }
  return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

template <class F>
Poly<F> make_monic(const Poly<F>& p) {
  if (p.is_zero()) return p;
  return field_inverse(p.lead()) * p;
}

/// Extended Euclid over a field: returns (g, s, t) with s*a + t*b = g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_xgcd(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(F(1)), s1;
  Poly<F> t0, t1 = Poly<F>::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1;
    Poly<F> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const F inv = field_inverse(r0.lead());
  return {inv * r0, inv * s0, inv * t0};
}

// ---- gcd over a gcd domain (Z, Z[t], ...) by primitive remainder sequences

template <class R>
Poly<R> pseudo_rem(Poly<R> a, const Poly<R>& b) {
  const long db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    const R la = a.lead();
    const auto shift = static_cast<std::size_t>(a.degree() - db);
    a = b.lead() * a - Poly<R>::monomial(la, shift) * b;
  }
  return a;
}

template <class R>
R content(const Poly<R>& p) {
  R g{};
  for (const auto& c : p.coeffs()) {
    g = ring_gcd(g, c);
    if (is_unit(g)) break;
  }
  return g;
}

template <class R>
Poly<R> exact_div_scalar(const Poly<R>& p, const R& s) {
  std::vector<R> c = p.coeffs();
  for (auto& a : c) a = exact_div(a, s);
  return Poly<R>(std::move(c));
}

template <class R>
Poly<R> primitive_part(const Poly<R>& p) {
  if (p.is_zero()) return p;
  return unit_normal(exact_div_scalar(p, content(p)));
}

template <class R>
Poly<R> ring_gcd(const Poly<R>& a, const Poly<R>& b) {
  if (a.is_zero()) return unit_normal(b);
  if (b.is_zero()) return unit_normal(a);
  const R c = ring_gcd(content(a), content(b));
  Poly<R> f = primitive_part(a);
  Poly<R> g = primitive_part(b);
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    Poly<R> r = pseudo_rem(f, g);
    f = std::move(g);
    g = r.is_zero() ? r : primitive_part(r);
  }
  return unit_normal(c * primitive_part(f));
}

/// Exact quotient a / b in R[x]; fails if b does not divide a.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroInverse, "polynomial division by zero");
  if (a.is_zero()) return a;
  const long db = b.degree();
  if (a.degree() < db) fail(ErrorCode::NotInvertible, "inexact polynomial division");
  std::vector<R> r = a.coeffs();
  std::vector<R> q(static_cast<std::size_t>(a.degree() - db + 1));
  for (long k = a.degree(); k >= db; --k) {
    const R& top = r[static_cast<std::size_t>(k)];
    if (is_zero(top)) continue;
    const R c = exact_div(top, b.lead());
    q[static_cast<std::size_t>(k - db)] = c;
    for (long i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= c * b.coeffs()[static_cast<std::size_t>(i)];
  }
  for (const auto& x : r)
    if (!is_zero(x)) fail(ErrorCode::NotInvertible, "inexact polynomial division");
  return Poly<R>(std::move(q));
}

}  // namespace fpg
