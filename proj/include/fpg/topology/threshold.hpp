#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fpg/errors.hpp"

namespace fpg {

inline constexpr std::size_t kThresholdGroundCap = 12;

/// Ground set of named values and a total membership table over its subsets
/// (bit i of a mask <=> value i).
struct ThresholdInstance {
  std::vector<std::string> values;
  std::vector<bool> member;  // size 2^|values|

  static ThresholdInstance with_values(std::vector<std::string> values) {
    if (values.size() > kThresholdGroundCap)
      fail(ErrorCode::InconsistentInput, "ground set larger than " + std::to_string(kThresholdGroundCap));
    ThresholdInstance t;
    t.member.assign(std::size_t{1} << values.size(), false);
    t.values = std::move(values);
    return t;
  }

  std::vector<std::string> subset_names(std::uint32_t mask) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (mask & (1U << i)) out.push_back(values[i]);
    return out;
  }

  std::string subset_string(std::uint32_t mask) const {
    std::string s = "{";
    bool first = true;
    for (const auto& v : subset_names(mask)) {
      s += (first ? "" : ",") + v;
      first = false;
    }
    return s + "}";
  }
};

/// Pairs (T, T') with T in the table, T subset of T' (one element larger) and
/// T' not in the table.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> monotonicity_violations(const ThresholdInstance& t) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> bad;
  const std::uint32_t full = static_cast<std::uint32_t>(t.member.size());
  for (std::uint32_t m = 0; m < full; ++m) {
    if (!t.member[m]) continue;
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      const std::uint32_t sup = m | (1U << i);
      if (sup != m && !t.member[sup]) bad.emplace_back(m, sup);
    }
  }
  return bad;
}

/// threshold_minimal_sets: inclusion-minimal members, sorted by size then by
/// the sorted index list. Fails with MonotonicityViolation if the table is not
/// closed upwards.
inline std::vector<std::uint32_t> threshold_minimal_sets(const ThresholdInstance& t) {
  if (t.member.size() != (std::size_t{1} << t.values.size()))
    fail(ErrorCode::InconsistentInput, "membership table is not total");
  const auto bad = monotonicity_violations(t);
  if (!bad.empty())
    fail(ErrorCode::MonotonicityViolation, t.subset_string(bad.front().first) + " is a member but its superset " +
                                                t.subset_string(bad.front().second) + " is not (" +
                                                std::to_string(bad.size()) + " violation(s))");
  std::vector<std::uint32_t> mins;
  const std::uint32_t full = static_cast<std::uint32_t>(t.member.size());
  for (std::uint32_t m = 0; m < full; ++m) {
    if (!t.member[m]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < t.values.size() && minimal; ++i)
      if ((m & (1U << i)) && t.member[m & ~(1U << i)]) minimal = false;
    if (minimal) mins.push_back(m);
  }
  auto key = [&](std::uint32_t m) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < t.values.size(); ++i)
      if (m & (1U << i)) idx.push_back(i);
    return idx;
  };
  std::sort(mins.begin(), mins.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto ka = key(a), kb = key(b);
    if (ka.size() != kb.size()) return ka.size() < kb.size();
    return ka < kb;
  });
  return mins;
}

}  // namespace fpg
