#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fpg/groups/presentation.hpp"

namespace fpg {

/// One factor u * r_i^e * u^-1 of a consequence certificate.
struct ConjugateFactor {
  Word conjugator;
  std::size_t relator = 0;
  int sign = 1;

  Word evaluate(const Presentation& p) const {
    const Word& r = p.relators().at(relator);
    return conjugator * (sign > 0 ? r : r.inverse()) * conjugator.inverse();
  }
};

/// Product of conjugated relators claimed to be freely equal to a word.
struct ConsequenceCertificate {
  std::vector<ConjugateFactor> factors;
  std::size_t depth() const { return factors.size(); }
};

/// Re-verify a certificate by free reduction only.
inline bool verify_certificate(const Presentation& p, const Word& w, const ConsequenceCertificate& c) {
  Word prod;
  for (const auto& f : c.factors) {
    if (f.relator >= p.num_relators() || f.conjugator.span() > p.num_generators()) return false;
    prod *= f.evaluate(p);
  }
  return prod == w;
}

namespace detail {

/// All reduced words of length <= width over n generators, in shortlex order.
inline std::vector<Word> words_up_to(std::size_t n, std::size_t width) {
  std::vector<Word> out{Word()};
  std::vector<Word> layer{Word()};
  for (std::size_t len = 1; len <= width; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int l = -static_cast<int>(n); l <= static_cast<int>(n); ++l) {
        if (l == 0 || (!w.empty() && w.letters().back() == -l)) continue;
        std::vector<Letter> ls = w.letters();
        ls.push_back(l);
        next.emplace_back(ls);
      }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace detail

/// consequence_check_bounded: breadth-first over products of at most `depth`
/// conjugated relators with conjugators of length at most `width`. Returns a
/// re-verified certificate or nothing (inconclusive).
inline std::optional<ConsequenceCertificate> consequence_check_bounded(const Presentation& p, const Word& w,
                                                                       std::size_t depth, std::size_t width) {
  if (w.empty()) return ConsequenceCertificate{};
  if (p.num_relators() == 0 || depth == 0) return std::nullopt;

  // canonical list of single factors (conjugator shortlex, relator, sign)
  std::vector<ConjugateFactor> singles;
  std::map<Word, std::size_t> first_single;  // value -> first factor index
  for (const auto& u : detail::words_up_to(p.num_generators(), width))
    for (std::size_t i = 0; i < p.num_relators(); ++i) {
      if (p.relators()[i].empty()) continue;
      for (int e : {1, -1}) {
        ConjugateFactor f{u, i, e};
        const Word val = f.evaluate(p);
        first_single.emplace(val, singles.size());
        singles.push_back(std::move(f));
      }
    }

  // depth d: enumerate prefixes of d-1 factors, look up the last factor
  std::vector<std::size_t> idx;
  for (std::size_t d = 1; d <= depth; ++d) {
    idx.assign(d - 1, 0);
    for (;;) {
      Word prefix;
      for (auto k : idx) prefix *= singles[k].evaluate(p);
      auto it = first_single.find(prefix.inverse() * w);
      if (it != first_single.end()) {
        ConsequenceCertificate c;
        for (auto k : idx) c.factors.push_back(singles[k]);
        c.factors.push_back(singles[it->second]);
        if (verify_certificate(p, w, c)) return c;
      }
      // odometer over prefix indices
      std::size_t pos = idx.size();
      while (pos > 0 && ++idx[pos - 1] == singles.size()) idx[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return std::nullopt;
}

}  // namespace fpg
