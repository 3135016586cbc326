#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/groups/presentation.hpp"
#include "fpg/groups/tietze.hpp"
#include "fpg/subgroups/coset_table.hpp"

namespace fpg {

/// Coset representatives from a breadth-first spanning tree (generator order,
/// generator before inverse); prefix-closed, coset 0 has the empty word.
struct SchreierTransversal {
  std::vector<Word> representatives;
  // (coset, generator) pairs that are tree edges in the forward direction
  std::vector<std::vector<bool>> tree_edge;
};

inline SchreierTransversal schreier_transversal(const CosetTable& t) {
  const std::size_t n = t.index(), gens = t.num_generators();
  SchreierTransversal st;
  st.representatives.assign(n, Word());
  st.tree_edge.assign(n, std::vector<bool>(gens, false));
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> order{0};
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t c = order[k];
    for (std::size_t g = 0; g < gens; ++g)
      for (int s : {1, -1}) {
        const Letter l = make_letter(g, s);
        const std::size_t d = t.step(c, l);
        if (seen[d]) continue;
        seen[d] = true;
        st.representatives[d] = st.representatives[c] * Word({l});
        if (s > 0)
          st.tree_edge[c][g] = true;  // s_{c,g} trivial
        else
          st.tree_edge[d][g] = true;  // d.g = c, s_{d,g} trivial
        order.push_back(d);
      }
  }
  if (order.size() != n) fail(ErrorCode::InvalidTable, "coset table is not transitive");
  return st;
}

/// Output of Reidemeister–Schreier: a subgroup presentation plus the name map
/// Schreier generator -> word in the parent generators.
struct SubgroupPresentation {
  Presentation raw;                // all coset-conjugated rewritten relators
  std::vector<Word> parent_words;  // per raw generator
  TietzeResult simplified;         // Tietze pass over raw
  std::size_t index = 0;
};

/// reidemeister_schreier: rewrite every relator at every coset over the
/// Schreier generators s_{c,g} = rep(c) g rep(c.g)^-1 (tree generators removed).
inline SubgroupPresentation reidemeister_schreier(const Presentation& p, const CosetTable& t,
                                                  const TietzeLimits& limits = {}) {
  t.require_valid_for(p);
  const std::size_t n = t.index(), gens = p.num_generators();
  const SchreierTransversal st = schreier_transversal(t);

  std::vector<std::vector<long>> sgen(n, std::vector<long>(gens, -1));
  std::vector<std::string> names;
  std::vector<Word> parent;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t g = 0; g < gens; ++g) {
      if (st.tree_edge[c][g]) continue;
      sgen[c][g] = static_cast<long>(names.size());
      names.push_back(p.generators()[g] + "_" + std::to_string(c + 1));
      parent.push_back(st.representatives[c] * Word::generator(g) *
                       st.representatives[t.step(c, make_letter(g))].inverse());
    }

  std::vector<Word> rels;
  for (const auto& r : p.relators())
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Letter> out;
      std::size_t d = c;
      for (Letter l : r.letters()) {
        const std::size_t g = letter_gen(l);
        if (letter_sign(l) > 0) {
          if (sgen[d][g] >= 0) out.push_back(make_letter(static_cast<std::size_t>(sgen[d][g])));
          d = t.step(d, l);
        } else {
          const std::size_t e = t.step(d, l);
          if (sgen[e][g] >= 0) out.push_back(make_letter(static_cast<std::size_t>(sgen[e][g]), -1));
          d = e;
        }
      }
      if (d != c) fail(ErrorCode::InvalidTable, "relator does not close during rewriting");
      rels.emplace_back(out);
    }

  SubgroupPresentation sp;
  sp.raw = Presentation(std::move(names), std::move(rels));
  sp.parent_words = std::move(parent);
  sp.index = n;
  sp.simplified = tietze_simplify(sp.raw, limits);
  return sp;
}

/// Rank pqr + (p-1)(q-1) of the kernel of F_r * Z_p * Z_q -> Z_pq.
inline long kernel_rank_expected(long r, long p, long q) {
  if (p < 1 || q < 1 || r < 0) fail(ErrorCode::NotCoprime, "need p, q >= 1 and r >= 0");
  if (std::gcd(p, q) != 1) fail(ErrorCode::NotCoprime, "p and q are not coprime");
  return p * q * r + (p - 1) * (q - 1);
}

}  // namespace fpg
