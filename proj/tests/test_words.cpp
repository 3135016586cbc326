#include <gtest/gtest.h>

#include <random>

#include "fpg/fpg.hpp"

using namespace fpg;

namespace {

const Word x = Word::generator(0), y = Word::generator(1), v = Word::generator(3);

Word random_word(std::mt19937& rng, std::size_t rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), gen(0, rank - 1);
  std::bernoulli_distribution inv(0.5);
  std::vector<Letter> ls;
  for (std::size_t k = len(rng); k > 0; --k) ls.push_back(make_letter(gen(rng), inv(rng) ? -1 : 1));
  return Word(ls);
}

BraidWord random_braid(std::mt19937& rng, std::size_t strands, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, static_cast<int>(strands) - 1);
  std::bernoulli_distribution inv(0.5);
  BraidWord b{strands, {}};
  for (std::size_t k = len(rng); k > 0; --k) b.letters.push_back(inv(rng) ? -idx(rng) : idx(rng));
  return b;
}

Word product_of_generators(std::size_t n) {
  Word w;
  for (std::size_t i = 0; i < n; ++i) w *= Word::generator(i);
  return w;
}

}  // namespace

TEST(WordReduce, Examples) {
  EXPECT_TRUE(word_reduce({1, -1}).empty());
  EXPECT_EQ(word_reduce({1, 2, -2, 1}), x.pow(2));
  EXPECT_EQ(commutator(x, v).letters(), (std::vector<Letter>{1, 4, -1, -4}));
}

TEST(WordReduce, InverseConventionCommutator) {
  EXPECT_EQ(commutator(x, v, CommutatorConvention::Inverse).letters(), (std::vector<Letter>{-1, -4, 1, 4}));
}

TEST(WordReduce, UnknownGeneratorFails) {
  try {
    word_reduce({1, 3}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownGenerator);
  }
}

TEST(WordReduce, IdempotentAndSubadditive) {
  std::mt19937 rng(1);
  for (int i = 0; i < 300; ++i) {
    const Word u = random_word(rng, 3, 12), w = random_word(rng, 3, 12);
    EXPECT_EQ(word_reduce(u.letters()), u);
    EXPECT_LE((u * w).length(), u.length() + w.length());
    EXPECT_TRUE((u * u.inverse()).empty());
  }
}

TEST(Endomorphism, Examples) {
  std::mt19937 rng(2);
  const Word w = random_word(rng, 2, 10);
  EXPECT_EQ(apply_endomorphism(FreeEndomorphism::identity(2), w), w);
  const FreeEndomorphism e({x * y, y});
  EXPECT_EQ(apply_endomorphism(e, x.pow(2)), x * y * x * y);
  const FreeEndomorphism s1 = artin_automorphism(BraidWord{2, {1}});
  EXPECT_EQ(apply_endomorphism(s1, apply_endomorphism(s1, x)), x * y * x * y.inverse() * x.inverse());
}

TEST(Endomorphism, RankMismatchFails) {
  try {
    apply_endomorphism(FreeEndomorphism::identity(1), y);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankMismatch);
  }
}

TEST(Endomorphism, HomomorphicAndComposes) {
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const FreeEndomorphism e({random_word(rng, 3, 4), random_word(rng, 3, 4), random_word(rng, 3, 4)});
    const FreeEndomorphism f({random_word(rng, 3, 4), random_word(rng, 3, 4), random_word(rng, 3, 4)});
    const Word u = random_word(rng, 3, 8), w = random_word(rng, 3, 8);
    EXPECT_EQ(apply_endomorphism(e, u * w), apply_endomorphism(e, u) * apply_endomorphism(e, w));
    EXPECT_EQ(apply_endomorphism(compose(e, f), u), apply_endomorphism(e, apply_endomorphism(f, u)));
  }
}

TEST(Artin, Examples) {
  EXPECT_EQ(artin_automorphism(BraidWord{3, {}}), FreeEndomorphism::identity(3));
  EXPECT_EQ(artin_automorphism(BraidWord{2, {1}}), FreeEndomorphism({x * y * x.inverse(), x}));
  EXPECT_EQ(artin_automorphism(BraidWord{2, {1, -1}}), FreeEndomorphism::identity(2));
}

TEST(Artin, IndexOutOfRangeFails) {
  try {
    artin_automorphism(BraidWord{3, {3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
}

TEST(Artin, BraidRelations) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const int top = static_cast<int>(n) - 1;
    for (int i = 1; i < top; ++i)
      EXPECT_EQ(artin_automorphism(BraidWord{n, {i, i + 1, i}}), artin_automorphism(BraidWord{n, {i + 1, i, i + 1}}));
    for (int i = 1; i <= top; ++i)
      for (int j = i + 2; j <= top; ++j)
        EXPECT_EQ(artin_automorphism(BraidWord{n, {i, j}}), artin_automorphism(BraidWord{n, {j, i}}));
  }
}

TEST(Artin, LeftToRightAction) {
  std::mt19937 rng(4);
  for (int i = 0; i < 50; ++i) {
    const BraidWord a = random_braid(rng, 4, 6), b = random_braid(rng, 4, 6);
    BraidWord ab = a;
    ab.letters.insert(ab.letters.end(), b.letters.begin(), b.letters.end());
    EXPECT_EQ(artin_automorphism(ab), compose(artin_automorphism(b), artin_automorphism(a)));
  }
}

TEST(Artin, FixesProductOfGenerators) {
  std::mt19937 rng(5);
  for (std::size_t n = 2; n <= 6; ++n)
    for (int i = 0; i < 40; ++i) {
      const BraidWord b = random_braid(rng, n, 20);
      const Word prod = product_of_generators(n);
      EXPECT_EQ(apply_endomorphism(artin_automorphism(b), prod), prod);
    }
}

TEST(GroupRing, Examples) {
  const GroupRingElement one(1), gx(x), gy(y);
  EXPECT_EQ(group_ring_mul(one - gx, one + gx), one - GroupRingElement(x.pow(2)));
  EXPECT_EQ(group_ring_mul(gx, gy - one), GroupRingElement(x * y) - gx);
  EXPECT_EQ(group_ring_mul(one - GroupRingElement(x * y * x.inverse()), gx), gx - GroupRingElement(x * y));
}

TEST(GroupRing, AugmentationIsMultiplicative) {
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int i = 0; i < 50; ++i) {
    GroupRingElement a, b;
    for (int k = 0; k < 3; ++k) {
      a += GroupRingElement(random_word(rng, 2, 4), c(rng));
      b += GroupRingElement(random_word(rng, 2, 4), c(rng));
    }
    EXPECT_EQ((a * b).augmentation(), a.augmentation() * b.augmentation());
  }
}
