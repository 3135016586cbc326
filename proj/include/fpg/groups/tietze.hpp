#pragma once

#include <cstddef>
#include <algorithm>
#include <string>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/groups/presentation.hpp"

namespace fpg {

enum class TietzeMoveKind { Reduce, DeleteTrivialRelator, EliminateGenerator, Substitute };

inline std::string to_string(TietzeMoveKind k) {
  switch (k) {
    case TietzeMoveKind::Reduce: return "reduce";
    case TietzeMoveKind::DeleteTrivialRelator: return "delete-trivial-relator";
    case TietzeMoveKind::EliminateGenerator: return "eliminate-generator";
    case TietzeMoveKind::Substitute: return "substitute";
  }
  return "?";
}

/// One applied move with enough data to replay it.
struct TietzeMove {
  TietzeMoveKind kind{};
  std::size_t generator = 0;  // eliminated generator (EliminateGenerator)
  std::size_t relator = 0;    // relator removed / rewritten
  std::size_t source = 0;     // relator used for a substitution
  Word word;                  // generator image (eliminate) or new relator (substitute)
  std::size_t gens_before = 0, rels_before = 0, length_before = 0;
  std::size_t gens_after = 0, rels_after = 0, length_after = 0;
};

using TietzeTrace = std::vector<TietzeMove>;

struct TietzeLimits {
  double growth_factor = 4.0;
  std::size_t max_iterations = 1000;
};

struct TietzeResult {
  Presentation presentation;
  TietzeTrace trace;
  bool free = false;              // zero relators remain
  bool limit_exceeded = false;    // iteration cap hit; presentation is best-so-far
  std::size_t free_rank() const { return presentation.num_generators(); }
  std::string verdict() const {
    return free ? "free of rank " + std::to_string(presentation.num_generators()) : "inconclusive";
  }
};

namespace detail {

/// Replace generator g by `image` (a word avoiding g) everywhere and renumber
/// the generators above g down by one.
inline Word substitute_generator(const Word& w, std::size_t g, const Word& image) {
  Word out;
  const Word image_inv = image.inverse();
  for (Letter l : w.letters()) {
    const std::size_t h = letter_gen(l);
    if (h == g)
      out *= letter_sign(l) > 0 ? image : image_inv;
    else
      out *= Word::generator(h > g ? h - 1 : h, letter_sign(l));
  }
  return out;
}

inline Word renumber_after_removal(const Word& w, std::size_t g) {
  Word out;
  for (Letter l : w.letters()) {
    const std::size_t h = letter_gen(l);
    out *= Word::generator(h > g ? h - 1 : h, letter_sign(l));
  }
  return out;
}

inline Word rotate(const Word& w, std::size_t k) {
  std::vector<Letter> ls(w.letters().begin() + static_cast<long>(k), w.letters().end());
  ls.insert(ls.end(), w.letters().begin(), w.letters().begin() + static_cast<long>(k));
  return Word(ls);
}

}  // namespace detail

/// Apply a single recorded move to a presentation.
inline Presentation apply_tietze_move(const Presentation& p, const TietzeMove& m) {
  std::vector<std::string> gens = p.generators();
  std::vector<Word> rels = p.relators();
  switch (m.kind) {
    case TietzeMoveKind::Reduce:
      for (auto& r : rels) r = r.cyclically_reduced();
      break;
    case TietzeMoveKind::DeleteTrivialRelator:
      rels.erase(rels.begin() + static_cast<long>(m.relator));
      break;
    case TietzeMoveKind::Substitute:
      rels[m.relator] = m.word;
      break;
    case TietzeMoveKind::EliminateGenerator: {
      rels.erase(rels.begin() + static_cast<long>(m.relator));
      const Word image = detail::renumber_after_removal(m.word, m.generator);
      for (auto& r : rels) {
        // image is expressed in the old numbering; substitute then renumber
        Word out;
        for (Letter l : r.letters()) {
          const std::size_t h = letter_gen(l);
          if (h == m.generator)
            out *= letter_sign(l) > 0 ? image : image.inverse();
          else
            out *= Word::generator(h > m.generator ? h - 1 : h, letter_sign(l));
        }
        r = out;
      }
      gens.erase(gens.begin() + static_cast<long>(m.generator));
      break;
    }
  }
  return Presentation(std::move(gens), std::move(rels));
}

inline Presentation replay_trace(Presentation p, const TietzeTrace& trace) {
  for (const auto& m : trace) p = apply_tietze_move(p, m);
  return p;
}

/// Deterministic bounded Tietze simplification: delete empty relators,
/// eliminate generators occurring exactly once in a relator (shortest relator
/// first, then generator index), then shorten relators by cyclic products with
/// shorter relators, until a fixpoint or the caps are reached.
inline TietzeResult tietze_simplify(const Presentation& input, const TietzeLimits& limits = {}) {
  TietzeResult res;
  Presentation p = input;
  const std::size_t budget = std::max<std::size_t>(
      static_cast<std::size_t>(limits.growth_factor * static_cast<double>(std::max<std::size_t>(input.total_length(), 1))),
      input.total_length());

  auto record = [&](TietzeMove m) {
    m.gens_before = p.num_generators();
    m.rels_before = p.num_relators();
    m.length_before = p.total_length();
    p = apply_tietze_move(p, m);
    m.gens_after = p.num_generators();
    m.rels_after = p.num_relators();
    m.length_after = p.total_length();
    res.trace.push_back(std::move(m));
  };

  std::size_t iter = 0;
  for (;; ++iter) {
    if (iter >= limits.max_iterations) {
      res.limit_exceeded = true;
      break;
    }
    // cyclic reduction is maintained by Presentation; delete empty relators
    bool moved = false;
    for (std::size_t i = 0; i < p.num_relators(); ++i)
      if (p.relators()[i].empty()) {
        TietzeMove m;
        m.kind = TietzeMoveKind::DeleteTrivialRelator;
        m.relator = i;
        record(std::move(m));
        moved = true;
        break;
      }
    if (moved) continue;

    // generator elimination
    struct Candidate {
      std::size_t len, gen, rel;
    };
    {
      // shortest relator first, then generator, then relator index; a
      // candidate whose substitution would exceed the growth bound is skipped
      std::vector<Candidate> cands;
      for (std::size_t i = 0; i < p.num_relators(); ++i) {
        const Word& r = p.relators()[i];
        std::vector<std::size_t> count(p.num_generators(), 0);
        for (Letter l : r.letters()) ++count[letter_gen(l)];
        for (std::size_t g = 0; g < p.num_generators(); ++g)
          if (count[g] == 1) cands.push_back({r.length(), g, i});
      }
      std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.len != b.len) return a.len < b.len;
        if (a.gen != b.gen) return a.gen < b.gen;
        return a.rel < b.rel;
      });
      bool done = false;
      for (const auto& c : cands) {
        const Word& r = p.relators()[c.rel];
        std::size_t pos = 0;
        while (letter_gen(r[pos]) != c.gen) ++pos;
        const Word rot = detail::rotate(r, pos);  // g^e * s
        const Word s(std::vector<Letter>(rot.letters().begin() + 1, rot.letters().end()));
        const Word image = letter_sign(rot[0]) > 0 ? s.inverse() : s;
        std::size_t new_len = 0;
        for (std::size_t i = 0; i < p.num_relators(); ++i) {
          if (i == c.rel) continue;
          new_len += p.relators()[i].length();
          std::size_t occ = 0;
          for (Letter l : p.relators()[i].letters()) occ += letter_gen(l) == c.gen;
          new_len += occ * (image.length() > 0 ? image.length() - 1 : 0);
        }
        if (new_len > budget) continue;
        TietzeMove m;
        m.kind = TietzeMoveKind::EliminateGenerator;
        m.generator = c.gen;
        m.relator = c.rel;
        m.word = image;
        record(std::move(m));
        done = true;
        break;
      }
      if (done) continue;
    }

    // substitution: shorten r_i by a cyclic product with a conjugate of r_j^{+-1}
    bool substituted = false;
    for (std::size_t i = 0; i < p.num_relators() && !substituted; ++i) {
      const Word& ri = p.relators()[i];
      for (std::size_t j = 0; j < p.num_relators() && !substituted; ++j) {
        if (i == j) continue;
        const Word& rj = p.relators()[j];
        if (rj.length() > ri.length()) continue;
        for (int e : {1, -1}) {
          const Word rje = e > 0 ? rj : rj.inverse();
          for (std::size_t a = 0; a < ri.length() && !substituted; ++a) {
            const Word ra = detail::rotate(ri, a);
            for (std::size_t b = 0; b < std::max<std::size_t>(rje.length(), 1) && !substituted; ++b) {
              const Word cand = (ra * detail::rotate(rje, b).inverse()).cyclically_reduced();
              if (cand.length() < ri.length()) {
                TietzeMove m;
                m.kind = TietzeMoveKind::Substitute;
                m.relator = i;
                m.source = j;
                m.word = cand;
                record(std::move(m));
                substituted = true;
              }
            }
          }
          if (substituted) break;
        }
      }
    }
    if (!substituted) break;
  }
  res.free = p.num_relators() == 0;
  res.presentation = std::move(p);
  return res;
}

}  // namespace fpg
