#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#include "fpg/errors.hpp"

namespace fpg {

/// A letter is a nonzero int: +(g+1) is generator g, -(g+1) its inverse.
using Letter = int;

inline Letter make_letter(std::size_t gen, int sign = 1) {
  const int l = static_cast<int>(gen) + 1;
  return sign < 0 ? -l : l;
}
inline std::size_t letter_gen(Letter l) { return static_cast<std::size_t>(std::abs(l) - 1); }
inline int letter_sign(Letter l) { return l < 0 ? -1 : 1; }

/// Freely reduced word in indexed generators.
class Word {
 public:
  Word() = default;
  /// Reduces the given letters freely.
  explicit Word(const std::vector<Letter>& letters) {
    for (Letter l : letters) push(l);
  }
  static Word generator(std::size_t gen, int sign = 1) { return Word({make_letter(gen, sign)}); }

  const std::vector<Letter>& letters() const { return l_; }
  std::size_t length() const { return l_.size(); }
  bool empty() const { return l_.empty(); }
  Letter operator[](std::size_t i) const { return l_[i]; }

  /// Largest generator index used plus one (0 for the empty word).
  std::size_t span() const {
    std::size_t s = 0;
    for (Letter l : l_) s = std::max(s, letter_gen(l) + 1);
    return s;
  }

  Word inverse() const {
    Word w;
    w.l_.reserve(l_.size());
    for (std::size_t i = l_.size(); i-- > 0;) w.l_.push_back(-l_[i]);
    return w;
  }

  Word& operator*=(const Word& o) {
    for (Letter l : o.l_) push(l);
    return *this;
  }
  friend Word operator*(Word a, const Word& b) { return a *= b; }

  Word pow(long e) const {
    Word base = e < 0 ? inverse() : *this;
    Word r;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) r *= base;
    return r;
  }

  /// Sum of exponents of generator `gen`.
  long exponent_sum(std::size_t gen) const {
    long s = 0;
    for (Letter l : l_)
      if (letter_gen(l) == gen) s += letter_sign(l);
    return s;
  }

  /// Cyclically reduced conjugate (strips matching first/last letters).
  Word cyclically_reduced() const {
    std::size_t i = 0, j = l_.size();
    while (j - i >= 2 && l_[i] == -l_[j - 1]) {
      ++i;
      --j;
    }
    Word w;
    w.l_.assign(l_.begin() + static_cast<long>(i), l_.begin() + static_cast<long>(j));
    return w;
  }

  /// Prefix of the first k letters.
  Word prefix(std::size_t k) const {
    Word w;
    w.l_.assign(l_.begin(), l_.begin() + static_cast<long>(std::min(k, l_.size())));
    return w;
  }

  friend bool operator==(const Word& a, const Word& b) { return a.l_ == b.l_; }
  friend bool operator!=(const Word& a, const Word& b) { return a.l_ != b.l_; }
  /// Shortlex order (length first, then letters).
  friend bool operator<(const Word& a, const Word& b) {
    if (a.l_.size() != b.l_.size()) return a.l_.size() < b.l_.size();
    return a.l_ < b.l_;
  }

  /// Render with generator names; inverses as name^-1, powers collapsed.
  std::string to_string(const std::vector<std::string>& names) const {
    if (l_.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < l_.size()) {
      std::size_t j = i;
      while (j < l_.size() && l_[j] == l_[i]) ++j;
      const long e = static_cast<long>(j - i) * letter_sign(l_[i]);
      const std::size_t g = letter_gen(l_[i]);
      if (!out.empty()) out += ' ';
      out += g < names.size() ? names[g] : "g" + std::to_string(g + 1);
      if (e != 1) out += "^" + std::to_string(e);
      i = j;
    }
    return out;
  }

 private:
  void push(Letter l) {
    if (l == 0) fail(ErrorCode::UnknownGenerator, "letter 0 is not a generator");
    if (!l_.empty() && l_.back() == -l)
      l_.pop_back();
    else
      l_.push_back(l);
  }
  std::vector<Letter> l_;
};

/// word_reduce: free reduction of a raw letter sequence; with rank > 0 every
/// letter must name one of the first `rank` generators.
inline Word word_reduce(const std::vector<Letter>& letters, std::size_t rank = 0) {
  for (Letter l : letters) {
    if (l == 0 || (rank > 0 && letter_gen(l) >= rank))
      fail(ErrorCode::UnknownGenerator, "letter " + std::to_string(l) + " outside the generating set");
  }
  return Word(letters);
}

/// Commutator conventions: Standard [a,b] = a b a^-1 b^-1 (the default),
/// Inverse [a,b] = a^-1 b^-1 a b (offered for experiments).
enum class CommutatorConvention { Standard, Inverse };

inline std::string to_string(CommutatorConvention c) {
  return c == CommutatorConvention::Standard ? "[a,b] = a b a^-1 b^-1" : "[a,b] = a^-1 b^-1 a b";
}

/// Commutator [a, b] = a b a^-1 b^-1 (or a^-1 b^-1 a b).
inline Word commutator(const Word& a, const Word& b, CommutatorConvention c = CommutatorConvention::Standard) {
  return c == CommutatorConvention::Standard ? a * b * a.inverse() * b.inverse()
                                             : a.inverse() * b.inverse() * a * b;
}

}  // namespace fpg
