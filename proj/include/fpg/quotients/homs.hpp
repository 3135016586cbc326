#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/groups/permutation.hpp"
#include "fpg/groups/presentation.hpp"

namespace fpg {

inline constexpr std::size_t kDefaultDegreeCap = 6;

/// Homomorphism to the symmetric group of a given degree.
struct FiniteHom {
  std::size_t degree = 0;
  std::vector<Perm> images;

  Perm evaluate(const Word& w) const {
    std::vector<Perm> inv;
    for (const auto& a : images) inv.push_back(perm_inverse(a));
    return perm_evaluate(images, inv, w, degree);
  }
};

/// verify_finite_hom: all relators evaluate to the identity.
inline bool verify_finite_hom(const Presentation& p, const FiniteHom& h) {
  if (h.images.size() != p.num_generators())
    fail(ErrorCode::DegreeMismatch, "expected " + std::to_string(p.num_generators()) + " images, got " +
                                        std::to_string(h.images.size()));
  for (const auto& a : h.images)
    if (a.size() != h.degree || !perm_is_valid(a))
      fail(ErrorCode::DegreeMismatch, "image is not a permutation of degree " + std::to_string(h.degree));
  std::vector<Perm> inv;
  for (const auto& a : h.images) inv.push_back(perm_inverse(a));
  for (const auto& r : p.relators())
    if (!perm_is_identity(perm_evaluate(h.images, inv, r, h.degree))) return false;
  return true;
}

/// All permutations of degree n in lexicographic order (identity first).
inline std::vector<Perm> all_permutations(std::size_t n) {
  std::vector<Perm> out;
  Perm p = perm_identity(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace detail {

/// Backtracking enumeration of homomorphisms P -> S_n. Generators are assigned
/// in `order`; each candidate image is taken in lexicographic order. A relator
/// is checked as soon as all its generators are assigned, and a relator in
/// which the next generator is the only unassigned one, occurring once,
/// forces that generator's image.
class HomEnumerator {
 public:
  HomEnumerator(const Presentation& p, std::size_t n, std::vector<std::size_t> order)
      : p_(p), n_(n), order_(std::move(order)), perms_(all_permutations(n)) {
    const std::size_t gens = p.num_generators();
    std::vector<std::size_t> pos(gens);
    for (std::size_t k = 0; k < order_.size(); ++k) pos[order_[k]] = k;
    check_at_.assign(gens, {});
    force_at_.assign(gens, std::nullopt);
    for (std::size_t i = 0; i < p.num_relators(); ++i) {
      const Word& r = p.relators()[i];
      if (r.empty()) continue;
      std::size_t last = 0;
      for (Letter l : r.letters()) last = std::max(last, pos[letter_gen(l)]);
      check_at_[last].push_back(i);
      if (!force_at_[last]) {
        const std::size_t g = order_[last];
        std::size_t occ = 0;
        for (Letter l : r.letters()) occ += letter_gen(l) == g;
        if (occ == 1) force_at_[last] = i;
      }
    }
    img_.assign(gens, perm_identity(n));
    inv_.assign(gens, perm_identity(n));
  }

  /// Visit homs whose first assigned generator takes image index `first`
  /// (or all, when nullopt). The visitor returns false to stop.
  void run(const std::function<bool(const std::vector<Perm>&)>& visit, std::optional<std::size_t> first = std::nullopt) {
    stop_ = false;
    if (order_.empty()) {
      if (all_hold(0)) visit(img_);
      return;
    }
    recurse(0, visit, first);
  }

 private:
  bool all_hold(std::size_t) const {
    for (const auto& r : p_.relators())
      if (!perm_is_identity(perm_evaluate(img_, inv_, r, n_))) return false;
    return true;
  }

  void assign(std::size_t g, const Perm& a) {
    img_[g] = a;
    inv_[g] = perm_inverse(a);
  }

  bool checks_pass(std::size_t k) const {
    for (auto i : check_at_[k])
      if (!perm_is_identity(perm_evaluate(img_, inv_, p_.relators()[i], n_))) return false;
    return true;
  }

  void recurse(std::size_t k, const std::function<bool(const std::vector<Perm>&)>& visit,
               std::optional<std::size_t> first) {
    if (stop_) return;
    if (k == order_.size()) {
      if (!visit(img_)) stop_ = true;
      return;
    }
    const std::size_t g = order_[k];
    if (force_at_[k] && !(k == 0 && first)) {
      // r rotated to g^e s: image of g is forced to s^{-e}
      const Word& r = p_.relators()[*force_at_[k]];
      std::size_t at = 0;
      while (letter_gen(r[at]) != g) ++at;
      std::vector<Letter> rest(r.letters().begin() + static_cast<long>(at) + 1, r.letters().end());
      rest.insert(rest.end(), r.letters().begin(), r.letters().begin() + static_cast<long>(at));
      const Perm s = perm_evaluate(img_, inv_, Word(rest), n_);
      assign(g, letter_sign(r[at]) > 0 ? perm_inverse(s) : s);
      if (checks_pass(k)) recurse(k + 1, visit, first);
      return;
    }
    for (std::size_t c = 0; c < perms_.size() && !stop_; ++c) {
      if (k == 0 && first && c != *first) continue;
      assign(g, perms_[c]);
      if (checks_pass(k)) recurse(k + 1, visit, first);
    }
  }

  const Presentation& p_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<Perm> perms_;
  std::vector<std::vector<std::size_t>> check_at_;
  std::vector<std::optional<std::size_t>> force_at_;
  std::vector<Perm> img_, inv_;
  bool stop_ = false;
};

inline std::vector<std::size_t> natural_order(std::size_t n) {
  std::vector<std::size_t> o(n);
  for (std::size_t i = 0; i < n; ++i) o[i] = i;
  return o;
}

}  // namespace detail

struct HomCountReport {
  std::string presentation_id;
  std::size_t degree = 0;
  Integer total = 0;
  std::size_t partitions = 1;  // number of independently counted parts
};

/// count_homs: |Hom(P, S_n)|. With `parallel`, the search is partitioned by
/// the first generator's image and the parts run concurrently; the integer
/// sum makes the result schedule independent.
inline HomCountReport count_homs(const Presentation& p, std::size_t n, bool parallel = false,
                                 std::size_t cap = kDefaultDegreeCap) {
  if (n > cap) fail(ErrorCode::DegreeTooLarge, "degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  if (n == 0) fail(ErrorCode::DegreeTooLarge, "degree must be at least 1");
  HomCountReport rep;
  rep.degree = n;
  const auto order = detail::natural_order(p.num_generators());
  auto count_part = [&](std::optional<std::size_t> first) {
    detail::HomEnumerator en(p, n, order);
    unsigned long long c = 0;
    en.run([&](const std::vector<Perm>&) { return ++c, true; }, first);
    return c;
  };
  if (!parallel || p.num_generators() == 0) {
    rep.total = Integer(std::to_string(count_part(std::nullopt)));
    return rep;
  }
  const std::size_t parts = all_permutations(n).size();
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), parts));
  std::vector<unsigned long long> counts(parts, 0);
  std::vector<std::future<void>> futs;
  for (std::size_t w = 0; w < workers; ++w)
    futs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t c = w; c < parts; c += workers) counts[c] = count_part(c);
    }));
  for (auto& f : futs) f.get();
  Integer total = 0;
  for (auto c : counts) total += Integer(std::to_string(c));
  rep.total = total;
  rep.partitions = parts;
  return rep;
}

/// find_separating_hom: smallest degree d <= n with a hom h, h(a) != h(b);
/// within a degree the first witness in colexicographic order of the image
/// tuple (last generator varies slowest, images in lexicographic order).
inline std::optional<FiniteHom> find_separating_hom(const Presentation& p, const Word& a, const Word& b,
                                                    std::size_t n, std::size_t cap = kDefaultDegreeCap) {
  if (n > cap) fail(ErrorCode::DegreeTooLarge, "degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  if (a.span() > p.num_generators() || b.span() > p.num_generators())
    fail(ErrorCode::UnknownGenerator, "word outside the presentation's generators");
  if (a == b) return std::nullopt;
  std::vector<std::size_t> order = detail::natural_order(p.num_generators());
  std::reverse(order.begin(), order.end());
  for (std::size_t d = 1; d <= n; ++d) {
    std::optional<FiniteHom> found;
    detail::HomEnumerator en(p, d, order);
    en.run([&](const std::vector<Perm>& img) {
      FiniteHom h{d, img};
      if (h.evaluate(a) != h.evaluate(b)) {
        found = h;
        return false;
      }
      return true;
    });
    if (found) {
      if (!verify_finite_hom(p, *found)) fail(ErrorCode::NotAHomomorphism, "search produced an invalid hom");
      return found;
    }
  }
  return std::nullopt;
}

}  // namespace fpg
