#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/words/word.hpp"

namespace fpg {

/// Endomorphism of the free group of rank n given by generator images.
class FreeEndomorphism {
 public:
  FreeEndomorphism() = default;
  explicit FreeEndomorphism(std::vector<Word> images) : img_(std::move(images)) {}

  static FreeEndomorphism identity(std::size_t rank) {
    std::vector<Word> img;
    for (std::size_t g = 0; g < rank; ++g) img.push_back(Word::generator(g));
    return FreeEndomorphism(std::move(img));
  }

  std::size_t rank() const { return img_.size(); }
  const std::vector<Word>& images() const { return img_; }
  const Word& image(std::size_t g) const { return img_.at(g); }

  /// apply_endomorphism: substitute generator images and reduce.
  Word apply(const Word& w) const {
    Word out;
    for (Letter l : w.letters()) {
      const std::size_t g = letter_gen(l);
      if (g >= img_.size())
        fail(ErrorCode::RankMismatch, "generator " + std::to_string(g + 1) + " outside rank " + std::to_string(img_.size()));
      out *= letter_sign(l) > 0 ? img_[g] : img_[g].inverse();
    }
    return out;
  }

  /// (e ∘ f)(x) = e(f(x)).
  friend FreeEndomorphism compose(const FreeEndomorphism& e, const FreeEndomorphism& f) {
    if (e.rank() != f.rank()) fail(ErrorCode::RankMismatch, "composing endomorphisms of different rank");
    std::vector<Word> img;
    for (const auto& w : f.img_) img.push_back(e.apply(w));
    return FreeEndomorphism(std::move(img));
  }

  friend bool operator==(const FreeEndomorphism& a, const FreeEndomorphism& b) { return a.img_ == b.img_; }

 private:
  std::vector<Word> img_;
};

inline Word apply_endomorphism(const FreeEndomorphism& e, const Word& w) { return e.apply(w); }

}  // namespace fpg
