#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#include "fpg/errors.hpp"
#include "fpg/words/endomorphism.hpp"

namespace fpg {

/// Braid word on n strands: +i is the Artin generator sigma_i, -i its inverse.
struct BraidWord {
  std::size_t strands = 0;
  std::vector<int> letters;

  void validate() const {
    for (int l : letters)
      if (l == 0 || static_cast<std::size_t>(std::abs(l)) >= strands)
        fail(ErrorCode::IndexOutOfRange,
             "braid generator " + std::to_string(l) + " invalid on " + std::to_string(strands) + " strands");
  }
  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands == b.strands && a.letters == b.letters;
  }
};

/// Automorphism of F_n for a single Artin generator:
/// sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i;
/// sigma_i^-1: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}.
inline FreeEndomorphism artin_generator(std::size_t strands, int letter) {
  BraidWord{strands, {letter}}.validate();
  auto img = FreeEndomorphism::identity(strands).images();
  const std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;
  const Word xi = Word::generator(i), xj = Word::generator(i + 1);
  if (letter > 0) {
    img[i] = xi * xj * xi.inverse();
    img[i + 1] = xi;
  } else {
    img[i] = xj;
    img[i + 1] = xj.inverse() * xi * xj;
  }
  return FreeEndomorphism(std::move(img));
}

/// artin_automorphism: the braid word acts left to right, so for b = s1 s2
/// the automorphism of s1 is applied first: A(b)(x) = A(s2)(A(s1)(x)).
inline FreeEndomorphism artin_automorphism(const BraidWord& b) {
  b.validate();
  FreeEndomorphism acc = FreeEndomorphism::identity(b.strands);
  for (int l : b.letters) acc = compose(artin_generator(b.strands, l), acc);
  return acc;
}

}  // namespace fpg
