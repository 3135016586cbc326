#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/words/word.hpp"

namespace fpg {

/// Permutation of {0..n-1} as an image list. Points are acted on from the
/// right: the product a * b applies a first, then b.
using Perm = std::vector<int>;

inline Perm perm_identity(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  return p;
}

inline bool perm_is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

inline Perm perm_mul(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[static_cast<std::size_t>(a[i])];
  return c;
}

inline Perm perm_inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return c;
}

inline bool perm_is_valid(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  for (int v : a) {
    if (v < 0 || static_cast<std::size_t>(v) >= a.size() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

/// Evaluate a word on generator images (left to right).
inline Perm perm_evaluate(const std::vector<Perm>& images, const std::vector<Perm>& inverses, const Word& w,
                          std::size_t degree) {
  Perm acc = perm_identity(degree);
  for (Letter l : w.letters()) {
    const std::size_t g = letter_gen(l);
    acc = perm_mul(acc, letter_sign(l) > 0 ? images[g] : inverses[g]);
  }
  return acc;
}

/// Disjoint cycle notation with 1-based points, "()" for the identity.
inline std::string perm_to_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out += (first ? "" : ",") + std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

/// Parse cycle notation such as "(1,2)(3,4)" or "()" into a permutation of
/// the given degree.
inline Perm perm_from_cycles(const std::string& s, std::size_t degree) {
  Perm p = perm_identity(degree);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < s.size()) {
    if (s[i] != '(') fail(ErrorCode::Parse, "expected '(' in cycle notation: " + s);
    ++i;
    std::vector<std::size_t> cyc;
    for (;;) {
      skip_ws();
      if (i < s.size() && s[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) fail(ErrorCode::Parse, "expected a point in cycle notation: " + s);
      const std::size_t pt = std::stoul(s.substr(i, j - i));
      if (pt < 1 || pt > degree) fail(ErrorCode::DegreeMismatch, "point " + std::to_string(pt) + " exceeds degree");
      cyc.push_back(pt - 1);
      i = j;
      skip_ws();
      if (i < s.size() && s[i] == ',') ++i;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (p[cyc[k]] != static_cast<int>(cyc[k])) fail(ErrorCode::Parse, "cycles are not disjoint: " + s);
      p[cyc[k]] = static_cast<int>(cyc[(k + 1) % cyc.size()]);
    }
    skip_ws();
  }
  if (!perm_is_valid(p)) fail(ErrorCode::Parse, "invalid permutation: " + s);
  return p;
}

/// Regular representation of k in Z/n: i -> i + k mod n.
inline Perm cyclic_shift(long k, std::size_t n) {
  Perm p(n);
  const long nn = static_cast<long>(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(((static_cast<long>(i) + k) % nn + nn) % nn);
  return p;
}

}  // namespace fpg
