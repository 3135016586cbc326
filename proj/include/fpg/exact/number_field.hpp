#pragma once

#include <cstddef>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fpg/exact/integer.hpp"
#include "fpg/exact/univariate.hpp"

namespace fpg {

/// Q(xi) = Q[xi]/(m(xi)) for a monic integer polynomial m.
class NumberField {
 public:
  explicit NumberField(std::vector<Integer> monic_coeffs, std::string generator_name = "xi")
      : m_(std::move(monic_coeffs)), name_(std::move(generator_name)) {
    if (m_.degree() < 1 || m_.lead() != 1)
      fail(ErrorCode::InconsistentInput, "number field needs a monic polynomial of degree >= 1");
  }

  static std::shared_ptr<const NumberField> make(std::vector<Integer> monic_coeffs,
                                                 std::string generator_name = "xi") {
    return std::make_shared<const NumberField>(std::move(monic_coeffs), std::move(generator_name));
  }

  /// The eighth cyclotomic field, xi^4 + 1 = 0.
  static std::shared_ptr<const NumberField> cyclotomic8() { return make({1, 0, 0, 0, 1}); }

  std::size_t degree() const { return static_cast<std::size_t>(m_.degree()); }
  const Poly<Integer>& modulus() const { return m_; }
  const std::string& generator_name() const { return name_; }

  Poly<Rational> modulus_over_q() const {
    std::vector<Rational> c;
    for (const auto& a : m_.coeffs()) c.emplace_back(a);
    return Poly<Rational>(std::move(c));
  }

  friend bool operator==(const NumberField& a, const NumberField& b) { return a.m_ == b.m_; }

 private:
  Poly<Integer> m_;
  std::string name_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field. An element without a field is a rational
/// scalar; it adopts the field of whatever it is combined with.
class NumberFieldElement {
 public:
  NumberFieldElement() = default;
  NumberFieldElement(long v) : NumberFieldElement(Rational(v)) {}
  NumberFieldElement(int v) : NumberFieldElement(Rational(v)) {}
  NumberFieldElement(const Rational& v) {
    if (!fpg::is_zero(v)) c_.push_back(v);
  }
  NumberFieldElement(FieldPtr field, std::vector<Rational> coeffs)
      : field_(std::move(field)), c_(std::move(coeffs)) {
    reduce();
  }

  static NumberFieldElement generator(const FieldPtr& field) {
    return NumberFieldElement(field, {Rational(0), Rational(1)});
  }

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }

  NumberFieldElement operator-() const {
    NumberFieldElement r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  NumberFieldElement& operator+=(const NumberFieldElement& o) {
    adopt(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  NumberFieldElement& operator-=(const NumberFieldElement& o) {
    adopt(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  NumberFieldElement& operator*=(const NumberFieldElement& o) {
    adopt(o);
    if (c_.empty() || o.c_.empty()) {
      c_.clear();
      return *this;
    }
    std::vector<Rational> prod(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (sgn(c_[i]) == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(prod);
    reduce();
    return *this;
  }
  NumberFieldElement& operator/=(const NumberFieldElement& o) { return *this *= o.inverse(); }

  friend NumberFieldElement operator+(NumberFieldElement a, const NumberFieldElement& b) { return a += b; }
  friend NumberFieldElement operator-(NumberFieldElement a, const NumberFieldElement& b) { return a -= b; }
  friend NumberFieldElement operator*(NumberFieldElement a, const NumberFieldElement& b) { return a *= b; }
  friend NumberFieldElement operator/(NumberFieldElement a, const NumberFieldElement& b) { return a /= b; }
  friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) { return a.c_ == b.c_; }

  /// Multiplicative inverse by extended Euclid against the defining polynomial.
  NumberFieldElement inverse() const {
    if (is_zero()) fail(ErrorCode::ZeroInverse, "inverse of zero in a number field");
    if (is_rational()) return NumberFieldElement(Rational(1) / c_[0]).with_field(field_);
    auto [g, s, t] = poly_xgcd(Poly<Rational>(c_), field_->modulus_over_q());
    (void)t;
    if (g.degree() != 0)
      fail(ErrorCode::NotInvertible, "element shares a factor with the defining polynomial");
    return NumberFieldElement(field_, s.coeffs());
  }

  NumberFieldElement pow(long e) const {
    NumberFieldElement base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    NumberFieldElement result = NumberFieldElement(1).with_field(field_);
    while (n) {
      if (n & 1UL) result *= base;
      base *= base;
      n >>= 1UL;
    }
    return result;
  }

  NumberFieldElement with_field(const FieldPtr& f) const {
    NumberFieldElement r = *this;
    if (!r.field_) r.field_ = f;
    return r;
  }

  /// Polynomial in the field generator, e.g. "-xi^3 + 1/2*xi".
  std::string to_string() const {
    const std::string name = field_ ? field_->generator_name() : "xi";
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Rational& a = c_[k];
      if (sgn(a) == 0) continue;
      Rational mag = abs(a);
      if (first) {
        if (sgn(a) < 0) os << "-";
      } else {
        os << (sgn(a) < 0 ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << "*";
      os << name;
      if (k > 1) os << "^" << k;
    }
    return os.str();
  }

 private:
  void adopt(const NumberFieldElement& o) {
    if (!o.field_) return;
    if (!field_) {
      field_ = o.field_;
      return;
    }
    if (field_ != o.field_ && !(*field_ == *o.field_))
      fail(ErrorCode::FieldMismatch, "elements of different number fields combined");
  }
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  void reduce() {
    trim();
    if (!field_) {
      if (c_.size() > 1) fail(ErrorCode::FieldMismatch, "non-rational element without a field");
      return;
    }
    const std::size_t d = field_->degree();
    const auto& m = field_->modulus().coeffs();
    for (std::size_t k = c_.size(); k-- > d;) {
      const Rational top = c_[k];
      if (sgn(top) == 0) continue;
      for (std::size_t i = 0; i <= d; ++i) c_[k - d + i] -= top * Rational(m[i]);
    }
    if (c_.size() > d) c_.resize(d);
    trim();
  }

  FieldPtr field_;
  std::vector<Rational> c_;
};

using NFElement = NumberFieldElement;

inline bool is_zero(const NumberFieldElement& a) { return a.is_zero(); }
inline bool is_unit(const NumberFieldElement& a) { return !a.is_zero(); }
inline NumberFieldElement field_inverse(const NumberFieldElement& a) { return a.inverse(); }
inline NumberFieldElement exact_div(const NumberFieldElement& a, const NumberFieldElement& b) { return a / b; }
inline std::string to_string(const NumberFieldElement& a) { return a.to_string(); }

/// nf_inverse: a * result = 1.
inline NumberFieldElement nf_inverse(const NumberFieldElement& a) { return a.inverse(); }

}  // namespace fpg
