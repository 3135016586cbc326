#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/exact/smith.hpp"
#include "fpg/words/word.hpp"

namespace fpg {

/// Finite presentation: named generators and relators (freely and cyclically
/// reduced). Empty relators are kept until a Tietze pass removes them.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generators, std::vector<Word> relators)
      : gens_(std::move(generators)) {
    std::set<std::string> seen;
    for (const auto& g : gens_)
      if (!seen.insert(g).second) fail(ErrorCode::InconsistentInput, "duplicate generator name '" + g + "'");
    for (auto& r : relators) add_relator(r);
  }

  static Presentation free_group(std::size_t rank, const std::string& prefix = "x") {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < rank; ++i) names.push_back(rank == 1 && prefix == "x" ? "x" : prefix + std::to_string(i + 1));
    return Presentation(std::move(names), {});
  }

  std::size_t num_generators() const { return gens_.size(); }
  std::size_t num_relators() const { return rels_.size(); }
  const std::vector<std::string>& generators() const { return gens_; }
  const std::vector<Word>& relators() const { return rels_; }

  /// Index of a generator by name, or -1.
  long find_generator(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (gens_[i] == name) return static_cast<long>(i);
    return -1;
  }

  void add_relator(const Word& r) {
    if (r.span() > gens_.size()) fail(ErrorCode::UnknownGenerator, "relator uses a generator outside the presentation");
    rels_.push_back(r.cyclically_reduced());
  }

  /// Total relator length.
  std::size_t total_length() const {
    std::size_t s = 0;
    for (const auto& r : rels_) s += r.length();
    return s;
  }

  /// Euler characteristic of the presentation 2-complex.
  long euler_characteristic() const {
    return 1 - static_cast<long>(gens_.size()) + static_cast<long>(rels_.size());
  }

  std::string word_string(const Word& w) const { return w.to_string(gens_); }

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.gens_ == b.gens_ && a.rels_ == b.rels_;
  }

 private:
  std::vector<std::string> gens_;
  std::vector<Word> rels_;
};

/// Free rank plus torsion coefficients (each >= 2, each dividing the next).
struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }

  /// e.g. "Z^2 + Z/6", "0" for the trivial group.
  std::string to_string() const {
    std::string out;
    if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    for (const auto& t : torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
    return out.empty() ? "0" : out;
  }
};

/// Invariants of the cokernel of an integer matrix acting on `columns` generators.
inline AbelianInvariants cokernel_invariants(const IntMatrix& relation_rows, std::size_t columns) {
  AbelianInvariants inv;
  if (relation_rows.rows() == 0 || columns == 0) {
    inv.free_rank = columns;
    return inv;
  }
  const SmithForm s = smith_normal_form(relation_rows);
  inv.free_rank = columns - s.rank();
  for (const auto& d : s.diagonal)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

/// Relator-by-generator exponent-sum matrix.
inline IntMatrix exponent_matrix(const Presentation& p) {
  IntMatrix m(p.num_relators(), p.num_generators());
  for (std::size_t i = 0; i < p.num_relators(); ++i)
    for (Letter l : p.relators()[i].letters()) m(i, letter_gen(l)) += letter_sign(l);
  return m;
}

/// abelianization: Smith normal form of the exponent-sum matrix.
inline AbelianInvariants abelianization(const Presentation& p) {
  return cokernel_invariants(exponent_matrix(p), p.num_generators());
}

/// Appends extra relators (words over P's generators).
inline Presentation quotient_by_normal_closure(const Presentation& p, const std::vector<Word>& extra) {
  std::vector<Word> rels = p.relators();
  for (const auto& w : extra) {
    if (w.span() > p.num_generators())
      fail(ErrorCode::UnknownGenerator, "extra relator uses a generator outside the presentation");
    rels.push_back(w);
  }
  return Presentation(p.generators(), std::move(rels));
}

/// Disjoint union of generators and relators; clashing names of the second
/// factor get a numeric suffix.
inline Presentation free_product(const Presentation& a, const Presentation& b) {
  std::vector<std::string> names = a.generators();
  std::set<std::string> used(names.begin(), names.end());
  for (const auto& g : b.generators()) {
    std::string n = g;
    for (int k = 2; used.count(n); ++k) n = g + "_" + std::to_string(k);
    used.insert(n);
    names.push_back(n);
  }
  std::vector<Word> rels = a.relators();
  const int shift = static_cast<int>(a.num_generators());
  for (const auto& r : b.relators()) {
    std::vector<Letter> ls;
    for (Letter l : r.letters()) ls.push_back(l > 0 ? l + shift : l - shift);
    rels.emplace_back(ls);
  }
  return Presentation(std::move(names), std::move(rels));
}

/// The cyclic group <name | name^d> (free of rank one for d = 0).
inline Presentation cyclic_group(long d, const std::string& name = "a") {
  std::vector<Word> rels;
  if (d != 0) rels.push_back(Word::generator(0).pow(d));
  return Presentation({name}, std::move(rels));
}

}  // namespace fpg
