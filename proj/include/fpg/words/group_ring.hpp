#pragma once

#include <map>
#include <string>
#include <vector>

#include "fpg/exact/integer.hpp"
#include "fpg/words/word.hpp"

namespace fpg {

/// Element of the integral group ring Z[F_n]: finite sum of coefficient * word.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  GroupRingElement(long c) {
    if (c != 0) t_[Word()] = Integer(c);
  }
  GroupRingElement(const Word& w, const Integer& c = 1) {
    if (sgn(c) != 0) t_[w] = c;
  }

  const std::map<Word, Integer>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  GroupRingElement operator-() const {
    GroupRingElement r = *this;
    for (auto& kv : r.t_) kv.second = -kv.second;
    return r;
  }
  GroupRingElement& operator+=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.t_) add(w, -c);
    return *this;
  }
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  /// group_ring_mul: bilinear convolution with free reduction.
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r;
    for (const auto& [wa, ca] : a.t_)
      for (const auto& [wb, cb] : b.t_) r.add(wa * wb, ca * cb);
    return r;
  }
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) { return a.t_ == b.t_; }

  /// Integer obtained by sending every word to 1 (augmentation).
  Integer augmentation() const {
    Integer s = 0;
    for (const auto& kv : t_) s += kv.second;
    return s;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : t_) {
      const bool neg = sgn(c) < 0;
      const Integer mag = abs(c);
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      if (w.empty()) {
        out += mag.get_str();
        continue;
      }
      if (mag != 1) out += mag.get_str() + "*";
      const std::string ws = w.to_string(names);
      out += w.length() > 1 ? "(" + ws + ")" : ws;
    }
    return out;
  }

 private:
  void add(const Word& w, const Integer& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = t_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) t_.erase(it);
    }
  }
  std::map<Word, Integer> t_;
};

inline GroupRingElement group_ring_mul(const GroupRingElement& a, const GroupRingElement& b) { return a * b; }

}  // namespace fpg
