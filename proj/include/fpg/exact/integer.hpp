#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "fpg/errors.hpp"

namespace fpg {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& a) { return sgn(a) == 0; }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

inline bool is_unit(const Integer& a) { return abs(a) == 1; }
inline bool is_unit(const Rational& a) { return sgn(a) != 0; }

inline int leading_sign(const Integer& a) { return sgn(a); }
inline int leading_sign(const Rational& a) { return sgn(a); }

inline Integer ring_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer ring_lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer exact_div(const Integer& a, const Integer& b) {
  if (sgn(b) == 0) fail(ErrorCode::ZeroInverse, "integer division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    fail(ErrorCode::NotInvertible, "inexact integer division");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Rational exact_div(const Rational& a, const Rational& b) {
  if (is_zero(b)) fail(ErrorCode::ZeroInverse, "division of a rational by zero");
  return a / b;
}

inline Integer unit_normal(const Integer& a) { return abs(a); }

inline Rational field_inverse(const Rational& a) {
  if (is_zero(a)) fail(ErrorCode::ZeroInverse, "inverse of rational zero");
  return 1 / a;
}

// Euclidean structure on Z used by the Smith normal form.
inline std::pair<Integer, Integer> euclid_divmod(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  // keep |r| <= |b|/2 so pivots shrink quickly
  Integer twice = 2 * abs(r);
  // the floor remainder has the sign of b, so stepping to the other
  // representative is the same move for either sign
  if (twice > abs(b)) {
    r -= b;
    q += 1;
  }
  return {q, r};
}

inline Integer euclid_norm(const Integer& a) { return abs(a); }

/// Unit u with u*a in canonical (nonnegative) form.
inline Integer unit_normal_factor(const Integer& a) { return sgn(a) < 0 ? Integer(-1) : Integer(1); }
inline Integer unit_inverse(const Integer& u) { return u; }

inline std::string to_string(const Integer& a) { return a.get_str(); }
inline std::string to_string(const Rational& a) { return a.get_str(); }

}  // namespace fpg
