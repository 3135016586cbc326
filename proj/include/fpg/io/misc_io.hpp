#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/groups/permutation.hpp"
#include "fpg/io/presentation_io.hpp"
#include "fpg/io/text.hpp"
#include "fpg/subgroups/coset_table.hpp"
#include "fpg/topology/cw.hpp"
#include "fpg/topology/threshold.hpp"
#include "fpg/words/braid.hpp"

namespace fpg::io {

// ---------------------------------------------------------------- braids

/// Braid file: "strands: n" then one "word: s1 S2 ..." line per braid
/// ('s<i>' is sigma_i, 'S<i>' its inverse; "word:" alone is the empty braid).
struct BraidList {
  std::size_t strands = 0;
  std::vector<BraidWord> braids;
};

inline BraidWord parse_braid_word(const std::string& text, std::size_t strands) {
  BraidWord b{strands, {}};
  for (const auto& tok : split_ws(text)) {
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 'S'))
      fail(ErrorCode::Parse, "braid letter '" + tok + "' must be s<i> or S<i>");
    const long i = parse_long(tok.substr(1), "braid generator index");
    if (i < 1) fail(ErrorCode::IndexOutOfRange, "braid generator index must be positive");
    b.letters.push_back(static_cast<int>(tok[0] == 's' ? i : -i));
  }
  b.validate();
  return b;
}

inline std::string serialize_braid_word(const BraidWord& b) {
  std::string out;
  for (int l : b.letters) out += (out.empty() ? "" : " ") + std::string(l > 0 ? "s" : "S") + std::to_string(std::abs(l));
  return out;
}

inline BraidList parse_braids(const std::string& text) {
  BraidList out;
  bool have = false;
  for (const auto& l : keyed_lines(text)) {
    if (l.key == "strands") {
      const long n = parse_long(l.value, "strands");
      if (n < 1) parse_error(l, "strand count must be positive");
      out.strands = static_cast<std::size_t>(n);
      have = true;
    } else if (l.key == "word") {
      if (!have) parse_error(l, "'word' before 'strands'");
      out.braids.push_back(parse_braid_word(l.value, out.strands));
    } else {
      parse_error(l, "unknown key '" + l.key + "'");
    }
  }
  if (!have) fail(ErrorCode::Parse, "missing 'strands' line");
  return out;
}

inline std::string serialize_braids(const BraidList& b) {
  std::string out = "strands: " + std::to_string(b.strands) + "\n";
  for (const auto& w : b.braids) out += "word: " + serialize_braid_word(w) + "\n";
  return out;
}

// ---------------------------------------------------------------- homs

/// Hom spec: "a:3 b:2 mod 6" (cyclic target) or "x:(1,2) y:(1,3) degree 4"
/// (permutations in cycle notation; the degree defaults to the largest point).
/// Every generator must be assigned.
inline FiniteImages parse_hom_spec(const std::string& text, const Presentation& p) {
  const auto toks = split_ws(text);
  std::vector<std::pair<std::string, std::string>> assigns;
  long mod = 0, degree = 0;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i] == "mod" || toks[i] == "degree") {
      if (i + 1 >= toks.size()) fail(ErrorCode::Parse, "'" + toks[i] + "' needs a value");
      (toks[i] == "mod" ? mod : degree) = parse_long(toks[i + 1], toks[i]);
      ++i;
      continue;
    }
    const auto c = toks[i].find(':');
    if (c == std::string::npos) fail(ErrorCode::Parse, "expected 'generator:image', got '" + toks[i] + "'");
    assigns.emplace_back(toks[i].substr(0, c), toks[i].substr(c + 1));
  }
  if (mod != 0 && degree != 0) fail(ErrorCode::Parse, "use either 'mod' or 'degree', not both");
  std::vector<std::optional<std::string>> by_gen(p.num_generators());
  for (const auto& [g, v] : assigns) {
    const long k = p.find_generator(g);
    if (k < 0) fail(ErrorCode::UnknownGenerator, "hom assigns unknown generator '" + g + "'");
    if (by_gen[static_cast<std::size_t>(k)]) fail(ErrorCode::Parse, "generator '" + g + "' assigned twice");
    by_gen[static_cast<std::size_t>(k)] = v;
  }
  for (std::size_t k = 0; k < by_gen.size(); ++k)
    if (!by_gen[k]) fail(ErrorCode::Parse, "hom does not assign generator '" + p.generators()[k] + "'");
  if (mod != 0) {
    if (mod < 1) fail(ErrorCode::Parse, "modulus must be positive");
    std::vector<long> residues;
    for (const auto& v : by_gen) residues.push_back(parse_long(*v, "residue"));
    return cyclic_images(residues, static_cast<std::size_t>(mod));
  }
  if (degree == 0) {
    for (const auto& v : by_gen) {
      std::string digits;
      for (char ch : *v + ")") {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
          digits += ch;
        } else if (!digits.empty()) {
          degree = std::max(degree, std::stol(digits));
          digits.clear();
        }
      }
    }
    degree = std::max<long>(degree, 1);
  }
  FiniteImages out;
  out.degree = static_cast<std::size_t>(degree);
  for (const auto& v : by_gen) out.images.push_back(perm_from_cycles(*v, out.degree));
  return out;
}

// ---------------------------------------------------------------- monodromy

/// Monodromy file: "loops: r", "fiber: m", then r lines
/// "mono: <image of x1> ; <image of x2> ; ..." (words in x1..xm), or
/// "mono: id" for the identity.
inline MonodromyData parse_monodromy(const std::string& text) {
  MonodromyData d;
  bool have_loops = false, have_fiber = false;
  std::vector<std::string> names;
  for (const auto& l : keyed_lines(text)) {
    if (l.key == "loops") {
      d.loops = static_cast<std::size_t>(std::max(0L, parse_long(l.value, "loops")));
      have_loops = true;
    } else if (l.key == "fiber") {
      d.fiber_rank = static_cast<std::size_t>(std::max(0L, parse_long(l.value, "fiber")));
      names.clear();
      for (std::size_t i = 1; i <= d.fiber_rank; ++i) names.push_back("x" + std::to_string(i));
      have_fiber = true;
    } else if (l.key == "mono") {
      if (!have_fiber) parse_error(l, "'mono' before 'fiber'");
      if (l.value == "id") {
        d.monodromies.push_back(FreeEndomorphism::identity(d.fiber_rank));
        continue;
      }
      std::vector<Word> imgs;
      for (const auto& part : split_on(l.value, ';')) imgs.push_back(parse_word(part, names));
      d.monodromies.emplace_back(std::move(imgs));
    } else {
      parse_error(l, "unknown key '" + l.key + "'");
    }
  }
  if (!have_loops || !have_fiber) fail(ErrorCode::Parse, "monodromy file needs 'loops' and 'fiber' lines");
  return d;
}

inline std::string serialize_monodromy(const MonodromyData& d) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= d.fiber_rank; ++i) names.push_back("x" + std::to_string(i));
  std::string out = "loops: " + std::to_string(d.loops) + "\nfiber: " + std::to_string(d.fiber_rank) + "\n";
  for (const auto& m : d.monodromies) {
    out += "mono:";
    for (std::size_t i = 0; i < m.rank(); ++i) out += (i ? " ; " : " ") + m.image(i).to_string(names);
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------- thresholds

/// Threshold file: "values: v1 v2 ..." then "member: <values>" lines listing
/// members of the table ("member: {}" is the empty set) and/or
/// "upset: <values>" lines adding every superset of the listed set.
inline std::uint32_t parse_subset(const std::string& text, const ThresholdInstance& t) {
  std::string s = trim(text);
  if (s == "{}") return 0;
  if (!s.empty() && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::uint32_t mask = 0;
  for (const auto& v : split_ws(s)) {
    const auto it = std::find(t.values.begin(), t.values.end(), v);
    if (it == t.values.end()) fail(ErrorCode::Parse, "unknown value '" + v + "'");
    mask |= 1U << static_cast<unsigned>(it - t.values.begin());
  }
  return mask;
}

inline ThresholdInstance parse_threshold(const std::string& text) {
  ThresholdInstance t;
  bool have = false;
  for (const auto& l : keyed_lines(text)) {
    if (l.key == "values") {
      auto vals = split_ws(l.value);
      for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
          if (vals[i] == vals[j]) parse_error(l, "duplicate value '" + vals[i] + "'");
      t = ThresholdInstance::with_values(std::move(vals));
      have = true;
    } else if (l.key == "member" || l.key == "upset") {
      if (!have) parse_error(l, "'" + l.key + "' before 'values'");
      const std::uint32_t m = parse_subset(l.value, t);
      if (l.key == "member") {
        t.member[m] = true;
      } else {
        for (std::uint32_t s = 0; s < t.member.size(); ++s)
          if ((s & m) == m) t.member[s] = true;
      }
    } else {
      parse_error(l, "unknown key '" + l.key + "'");
    }
  }
  if (!have) fail(ErrorCode::Parse, "missing 'values' line");
  return t;
}

inline std::string serialize_threshold(const ThresholdInstance& t) {
  std::string out = "values:";
  for (const auto& v : t.values) out += " " + v;
  out += "\n";
  for (std::uint32_t m = 0; m < t.member.size(); ++m)
    if (t.member[m]) out += "member: " + t.subset_string(m) + "\n";
  return out;
}

}  // namespace fpg::io
