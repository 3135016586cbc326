#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/groups/permutation.hpp"
#include "fpg/groups/presentation.hpp"

namespace fpg {

/// Complete right action of the generators on n cosets; coset 0 is the
/// subgroup itself.
class CosetTable {
 public:
  CosetTable() = default;
  explicit CosetTable(std::vector<Perm> action) : act_(std::move(action)) {
    for (const auto& a : act_) {
      if (!perm_is_valid(a) || (!act_.empty() && a.size() != act_[0].size()))
        fail(ErrorCode::InvalidTable, "generator action is not a permutation of the cosets");
      inv_.push_back(perm_inverse(a));
    }
  }

  std::size_t index() const { return act_.empty() ? 1 : act_[0].size(); }
  std::size_t num_generators() const { return act_.size(); }
  const std::vector<Perm>& action() const { return act_; }

  /// Coset reached from c by one letter.
  std::size_t step(std::size_t c, Letter l) const {
    const std::size_t g = letter_gen(l);
    return static_cast<std::size_t>(letter_sign(l) > 0 ? act_[g][c] : inv_[g][c]);
  }
  std::size_t trace(std::size_t c, const Word& w) const {
    for (Letter l : w.letters()) c = step(c, l);
    return c;
  }

  /// Every relator closes at every coset; optional subgroup generators fix coset 0.
  bool is_valid_for(const Presentation& p, const std::vector<Word>& subgroup_gens = {}) const {
    if (act_.size() != p.num_generators()) return false;
    for (const auto& r : p.relators())
      for (std::size_t c = 0; c < index(); ++c)
        if (trace(c, r) != c) return false;
    for (const auto& h : subgroup_gens)
      if (trace(0, h) != 0) return false;
    return true;
  }

  void require_valid_for(const Presentation& p) const {
    if (act_.size() != p.num_generators())
      fail(ErrorCode::InvalidTable, "coset table has " + std::to_string(act_.size()) + " generators, presentation has " +
                                        std::to_string(p.num_generators()));
    for (const auto& r : p.relators())
      for (std::size_t c = 0; c < index(); ++c)
        if (trace(c, r) != c)
          fail(ErrorCode::InvalidTable, "relator " + p.word_string(r) + " does not close at coset " + std::to_string(c + 1));
  }

  friend bool operator==(const CosetTable& a, const CosetTable& b) { return a.act_ == b.act_; }

 private:
  std::vector<Perm> act_;
  std::vector<Perm> inv_;
};

/// A homomorphism onto a finite permutation group given by generator images.
struct FiniteImages {
  std::size_t degree = 0;
  std::vector<Perm> images;
};

/// Images in Z/n given as residues, realised by the regular representation.
inline FiniteImages cyclic_images(const std::vector<long>& residues, std::size_t n) {
  FiniteImages f;
  f.degree = n;
  for (long k : residues) f.images.push_back(cyclic_shift(k, n));
  return f;
}

/// Check that images satisfy every relator; fails with NotAHomomorphism.
inline void require_homomorphism(const Presentation& p, const FiniteImages& f) {
  if (f.images.size() != p.num_generators())
    fail(ErrorCode::DegreeMismatch, "expected " + std::to_string(p.num_generators()) + " generator images");
  std::vector<Perm> inv;
  for (const auto& a : f.images) {
    if (a.size() != f.degree || !perm_is_valid(a)) fail(ErrorCode::DegreeMismatch, "image is not a permutation of the stated degree");
    inv.push_back(perm_inverse(a));
  }
  for (const auto& r : p.relators())
    if (!perm_is_identity(perm_evaluate(f.images, inv, r, f.degree)))
      fail(ErrorCode::NotAHomomorphism, "relator " + p.word_string(r) + " does not map to the identity");
}

/// coset_table_from_hom: cosets of the kernel are the elements of the image,
/// numbered breadth-first from the identity (generator order, image before
/// inverse); the table is right translation.
inline CosetTable coset_table_from_hom(const Presentation& p, const FiniteImages& f) {
  require_homomorphism(p, f);
  std::vector<Perm> inv;
  for (const auto& a : f.images) inv.push_back(perm_inverse(a));
  std::map<Perm, std::size_t> number;
  std::vector<Perm> elems;
  auto visit = [&](const Perm& e) {
    auto [it, inserted] = number.emplace(e, elems.size());
    if (inserted) elems.push_back(e);
    return it->second;
  };
  visit(perm_identity(f.degree));
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (std::size_t g = 0; g < f.images.size(); ++g) {
      visit(perm_mul(elems[k], f.images[g]));
      visit(perm_mul(elems[k], inv[g]));
    }
  std::vector<Perm> action(f.images.size(), Perm(elems.size()));
  for (std::size_t g = 0; g < f.images.size(); ++g)
    for (std::size_t k = 0; k < elems.size(); ++k)
      action[g][k] = static_cast<int>(number.at(perm_mul(elems[k], f.images[g])));
  return CosetTable(std::move(action));
}

/// Renumber cosets in breadth-first order from coset 0 (generator order, then
/// inverse), the canonical form used for every returned table.
inline CosetTable standardize(const CosetTable& t) {
  const std::size_t n = t.index();
  std::vector<long> newnum(n, -1);
  std::vector<std::size_t> order{0};
  newnum[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t g = 0; g < t.num_generators(); ++g)
      for (int s : {1, -1}) {
        const std::size_t d = t.step(order[k], make_letter(g, s));
        if (newnum[d] < 0) {
          newnum[d] = static_cast<long>(order.size());
          order.push_back(d);
        }
      }
  if (order.size() != n) fail(ErrorCode::InvalidTable, "coset table is not transitive");
  std::vector<Perm> action(t.num_generators(), Perm(n));
  for (std::size_t g = 0; g < t.num_generators(); ++g)
    for (std::size_t c = 0; c < n; ++c)
      action[g][static_cast<std::size_t>(newnum[c])] = static_cast<int>(newnum[t.action()[g][c]]);
  return CosetTable(std::move(action));
}

}  // namespace fpg
