#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/groups/presentation.hpp"
#include "fpg/subgroups/coset_table.hpp"

namespace fpg {

inline constexpr std::size_t kDefaultCosetCap = 1000000;

namespace detail {

/// HLT coset enumeration state. Columns 2g and 2g+1 hold generator g and its
/// inverse; -1 marks an undefined entry.
class CosetEnumerator {
 public:
  CosetEnumerator(std::size_t gens, std::size_t cap) : cols_(2 * gens), cap_(cap) { new_coset(); }

  static std::size_t col(Letter l) { return 2 * letter_gen(l) + (letter_sign(l) > 0 ? 0 : 1); }
  static std::size_t inv(std::size_t c) { return c ^ 1U; }

  bool live(std::size_t c) const { return parent_[c] == static_cast<long>(c); }
  std::size_t size() const { return parent_.size(); }
  long entry(std::size_t c, std::size_t x) const { return table_[c * cols_ + x]; }

  std::size_t new_coset() {
    if (parent_.size() >= cap_)
      fail(ErrorCode::CosetLimitExceeded, "coset enumeration exceeded " + std::to_string(cap_) + " cosets");
    const std::size_t c = parent_.size();
    parent_.push_back(static_cast<long>(c));
    table_.resize(table_.size() + cols_, -1);
    return c;
  }

  void define(std::size_t c, std::size_t x) {
    const std::size_t d = new_coset();
    set(c, x, d);
    set(d, inv(x), c);
  }

  /// Trace w from c, filling gaps by definitions (HLT scan-and-fill).
  void scan_and_fill(std::size_t c, const Word& w) {
    const auto& ls = w.letters();
    if (ls.empty()) return;
    std::size_t f = c, b = c;
    long i = 0, j = static_cast<long>(ls.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, col(ls[static_cast<std::size_t>(i)])) >= 0) {
        f = static_cast<std::size_t>(entry(f, col(ls[static_cast<std::size_t>(i)])));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, inv(col(ls[static_cast<std::size_t>(j)]))) >= 0) {
        b = static_cast<std::size_t>(entry(b, inv(col(ls[static_cast<std::size_t>(j)]))));
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        const std::size_t x = col(ls[static_cast<std::size_t>(i)]);
        set(f, x, b);
        set(b, inv(x), f);
        return;
      }
      define(f, col(ls[static_cast<std::size_t>(i)]));
    }
  }

  void fill_row(std::size_t c) {
    for (std::size_t x = 0; x < cols_ && live(c); ++x)
      if (entry(c, x) < 0) define(c, x);
  }

  /// Compact live cosets into a table (first-touch numbering is restored by
  /// standardize()).
  CosetTable to_table() const {
    std::vector<long> num(parent_.size(), -1);
    std::size_t n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      if (live(c)) num[c] = static_cast<long>(n++);
    const std::size_t gens = cols_ / 2;
    std::vector<Perm> action(gens, Perm(n));
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!live(c)) continue;
      for (std::size_t g = 0; g < gens; ++g) {
        const long d = entry(c, 2 * g);
        if (d < 0) fail(ErrorCode::CosetLimitExceeded, "coset table incomplete after enumeration");
        action[g][static_cast<std::size_t>(num[c])] = static_cast<int>(num[static_cast<std::size_t>(d)]);
      }
    }
    return standardize(CosetTable(std::move(action)));
  }

 private:
  void set(std::size_t c, std::size_t x, std::size_t d) { table_[c * cols_ + x] = static_cast<long>(d); }
  void unset(std::size_t c, std::size_t x) { table_[c * cols_ + x] = -1; }

  std::size_t rep(std::size_t c) {
    std::size_t r = c;
    while (parent_[r] != static_cast<long>(r)) r = static_cast<std::size_t>(parent_[r]);
    while (parent_[c] != static_cast<long>(r)) {
      const std::size_t next = static_cast<std::size_t>(parent_[c]);
      parent_[c] = static_cast<long>(r);
      c = next;
    }
    return r;
  }

  void merge(std::size_t k, std::size_t l, std::deque<std::size_t>& queue) {
    const std::size_t a = rep(k), b = rep(l);
    if (a == b) return;
    const std::size_t lo = std::min(a, b), hi = std::max(a, b);
    parent_[hi] = static_cast<long>(lo);
    queue.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::deque<std::size_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const std::size_t e = queue.front();
      queue.pop_front();
      for (std::size_t x = 0; x < cols_; ++x) {
        const long fl = entry(e, x);
        if (fl < 0) continue;
        const std::size_t f = static_cast<std::size_t>(fl);
        if (entry(f, inv(x)) == static_cast<long>(e)) unset(f, inv(x));
        const std::size_t e1 = rep(e), f1 = rep(f);
        if (entry(e1, x) >= 0) {
          merge(f1, static_cast<std::size_t>(entry(e1, x)), queue);
        } else if (entry(f1, inv(x)) >= 0) {
          merge(e1, static_cast<std::size_t>(entry(f1, inv(x))), queue);
        } else {
          set(e1, x, f1);
          set(f1, inv(x), e1);
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t cap_;
  std::vector<long> table_;
  std::vector<long> parent_;
};

}  // namespace detail

/// todd_coxeter: HLT enumeration of the cosets of the subgroup generated by
/// `subgroup_gens`; at most `max_cosets` cosets are ever defined.
inline CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                               std::size_t max_cosets = kDefaultCosetCap) {
  for (const auto& h : subgroup_gens)
    if (h.span() > p.num_generators()) fail(ErrorCode::UnknownGenerator, "subgroup generator outside the presentation");
  detail::CosetEnumerator en(p.num_generators(), max_cosets);
  for (const auto& h : subgroup_gens) en.scan_and_fill(0, h);
  for (std::size_t c = 0; c < en.size(); ++c) {
    for (const auto& r : p.relators()) {
      if (!en.live(c)) break;
      en.scan_and_fill(c, r);
    }
    if (en.live(c)) en.fill_row(c);
  }
  CosetTable t = en.to_table();
  if (!t.is_valid_for(p, subgroup_gens))
    fail(ErrorCode::InvalidTable, "coset enumeration produced an invalid table");
  return t;
}

}  // namespace fpg
