#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fpg/fpg.hpp"

using namespace fpg;

namespace {

FieldPtr q8() { return NumberField::cyclotomic8(); }

NumberFieldElement xi() { return NumberFieldElement::generator(q8()); }

NumberFieldElement random_element(std::mt19937& rng, bool nonzero = true) {
  std::uniform_int_distribution<int> d(-5, 5);
  for (;;) {
    std::vector<Rational> c;
    for (int i = 0; i < 4; ++i) c.push_back(Rational(d(rng)) / Rational(1 + std::abs(d(rng))));
    NumberFieldElement a(q8(), c);
    if (!nonzero || !a.is_zero()) return a;
  }
}

QLaurent qpoly(std::vector<long> coeffs, long low = 0) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return QLaurent(low, c);
}

NFLaurent p_of_t() {
  // t^2 - sqrt2 t + 1 with sqrt2 = xi^3 - xi
  const auto s = sqrt2_element(q8(), Sqrt2Convention::Primary);
  return NFLaurent(0, {NumberFieldElement(1).with_field(q8()), -s, NumberFieldElement(1).with_field(q8())});
}

IntMatrix random_int_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(NumberField, InverseExamples) {
  EXPECT_EQ(nf_inverse(xi()), -xi().pow(3));
  EXPECT_EQ(nf_inverse(NumberFieldElement(1).with_field(q8())), NumberFieldElement(1));
  const auto s = xi().pow(3) - xi();
  EXPECT_EQ(nf_inverse(s), s / NumberFieldElement(2));
}

TEST(NumberField, InverseOfZeroFails) {
  try {
    nf_inverse(NumberFieldElement(q8(), {}));
    FAIL() << "expected ZeroInverse";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroInverse);
  }
}

TEST(NumberField, Sqrt2SquaresToTwo) {
  for (auto c : {Sqrt2Convention::Primary, Sqrt2Convention::Conjugate}) {
    const auto s = sqrt2_element(q8(), c);
    EXPECT_EQ(s * s, NumberFieldElement(2));
  }
}

TEST(NumberField, XiToTheFourthIsMinusOne) { EXPECT_EQ(xi().pow(4), NumberFieldElement(-1)); }

TEST(NumberField, RandomProductsCancel) {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_element(rng), b = random_element(rng);
    EXPECT_EQ((a * b) * nf_inverse(b), a);
  }
}

TEST(Laurent, GcdExamples) {
  EXPECT_EQ(laurent_gcd(qpoly({-1, 0, 1}), qpoly({-1, 0, 0, 1})), qpoly({-1, 1}));
  EXPECT_EQ(laurent_gcd(qpoly({1, 0, 1}), qpoly({2, 0, 1})), qpoly({1}));
  const NFLaurent p = p_of_t();
  EXPECT_EQ(laurent_gcd(p * p, p), p);
  EXPECT_TRUE(laurent_gcd(QLaurent{}, QLaurent{}).is_zero());
}

TEST(Laurent, UnitNormalization) {
  // -2 t^-3 + 4 t^-2 ~ t - 1/2
  EXPECT_EQ(unit_normalize(qpoly({-2, 4}, -3)), QLaurent(0, {Rational(-1, 2), Rational(1)}));
  EXPECT_TRUE(equal_up_to_unit(qpoly({3, 3}, 5), qpoly({1, 1})));
}

TEST(Laurent, GcdDividesAndScales) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> d(-4, 4);
  auto rnd = [&](std::size_t len) {
    std::vector<long> c;
    for (std::size_t i = 0; i < len; ++i) c.push_back(d(rng));
    c.back() = c.back() == 0 ? 1 : c.back();
    c.front() = c.front() == 0 ? 1 : c.front();
    return qpoly(c, d(rng));
  };
  for (int i = 0; i < 50; ++i) {
    const auto f = rnd(4), g = rnd(3), h = rnd(3);
    const auto gg = laurent_gcd(f, g);
    EXPECT_TRUE(divides(gg, f));
    EXPECT_TRUE(divides(gg, g));
    EXPECT_EQ(laurent_gcd(f * h, g * h), unit_normalize(gg * h));
  }
}

TEST(BiLaurent, GcdExamples) {
  const auto t1 = BiLaurentPolynomial::t1(), t2 = BiLaurentPolynomial::t2();
  const BiLaurentPolynomial one(1);
  EXPECT_EQ(bilaurent_gcd(t1 - one, t2 - one), one);
  EXPECT_EQ(bilaurent_gcd((t1 - one) * (t2 - one), t1 - one), unit_normalize(t1 - one));
  EXPECT_EQ(bilaurent_gcd(t1 * t2 - t1 - t2 + one, t1 * t1 - one), unit_normalize(t1 - one));
}

TEST(BiLaurent, GcdIgnoresMonomialUnits) {
  const auto t1 = BiLaurentPolynomial::t1(), t2 = BiLaurentPolynomial::t2();
  const BiLaurentPolynomial one(1);
  const auto f = (t1 - one) * BiLaurentPolynomial::monomial(-1, -3, 2);
  EXPECT_EQ(bilaurent_gcd(f, (t1 - one) * (t2 + one)), unit_normalize(t1 - one));
}

TEST(Matrix, DeterminantExamples) {
  EXPECT_EQ(bareiss_determinant(IntMatrix::identity(5)), Integer(1));
  const QLaurent t = QLaurent::variable();
  Matrix<QLaurent> m{{t, QLaurent(1)}, {QLaurent(0), t}};
  EXPECT_EQ(bareiss_determinant(m), t * t);
}

TEST(Matrix, DeterminantOfRhoXMinusIdentity) {
  // rho1(x) t - I with rho1(x) = diag(-xi, xi^3)
  const auto one = NumberFieldElement(1).with_field(q8());
  const NFLaurent t = NFLaurent::monomial(one, 1);
  Matrix<NFLaurent> m{{NFLaurent(-xi()) * t - NFLaurent(one), NFLaurent{}},
                      {NFLaurent{}, NFLaurent(xi().pow(3)) * t - NFLaurent(one)}};
  const NFLaurent expected(0, {one, xi() + nf_inverse(xi()), one});
  EXPECT_EQ(bareiss_determinant(m), expected);
  EXPECT_EQ(expected, p_of_t());
}

TEST(Matrix, NotSquareFails) {
  try {
    bareiss_determinant(IntMatrix(2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSquare);
  }
}

TEST(Matrix, BareissAgreesWithCofactor) {
  std::mt19937 rng(7);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int i = 0; i < 50; ++i) {
      const auto m = random_int_matrix(rng, n, n, 5);
      EXPECT_EQ(bareiss_determinant(m), cofactor_determinant(m));
    }
}

TEST(Matrix, MinorGcdExamples) {
  EXPECT_EQ(minor_gcd(IntMatrix::identity(3), 3), Integer(1));
  const NFLaurent p = p_of_t();
  Matrix<NFLaurent> d{{p, NFLaurent{}}, {NFLaurent{}, p}};
  EXPECT_EQ(unit_normalize(minor_gcd(d, 2)), p * p);
  try {
    minor_gcd(IntMatrix::identity(2), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadMinorSize);
  }
}

TEST(Matrix, MinorGcdInvariantUnderPermutationAndUnits) {
  std::mt19937 rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto m = random_int_matrix(rng, 4, 3, 6);
    std::vector<std::size_t> rs{0, 1, 2, 3}, cs{0, 1, 2};
    std::shuffle(rs.begin(), rs.end(), rng);
    std::shuffle(cs.begin(), cs.end(), rng);
    auto pm = m.submatrix(rs, cs);
    for (std::size_t j = 0; j < pm.cols(); ++j) pm(0, j) = -pm(0, j);
    for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(minor_gcd(m, k), minor_gcd(pm, k));
  }
}

TEST(Smith, Examples) {
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal, (std::vector<Integer>{1, 6}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{1, 0}, {0, 0}}).diagonal, (std::vector<Integer>{1, 0}));
  EXPECT_EQ(smith_normal_form(IntMatrix{{2, 4}, {6, 8}}).diagonal, (std::vector<Integer>{2, 4}));
}

TEST(Smith, ReconstructionOnRandomMatrices) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_int_matrix(rng, dim(rng), dim(rng), 9);
    const auto s = smith_normal_form(a);
    EXPECT_EQ(s.U * a * s.V, s.D);
    EXPECT_EQ(abs(bareiss_determinant(s.U)), Integer(1));
    EXPECT_EQ(abs(bareiss_determinant(s.V)), Integer(1));
    for (std::size_t k = 0; k < s.diagonal.size(); ++k) {
      EXPECT_GE(sgn(s.diagonal[k]), 0);
      EXPECT_EQ(s.D(k, k), s.diagonal[k]);
      if (k + 1 < s.diagonal.size() && sgn(s.diagonal[k]) != 0) {
        EXPECT_TRUE(s.diagonal[k + 1] % s.diagonal[k] == 0);
      }
    }
  }
}

TEST(Smith, DiagonalInvariantUnderPermutations) {
  std::mt19937 rng(99);
  for (int i = 0; i < 40; ++i) {
    const auto a = random_int_matrix(rng, 4, 5, 7);
    std::vector<std::size_t> rs{0, 1, 2, 3}, cs{0, 1, 2, 3, 4};
    std::shuffle(rs.begin(), rs.end(), rng);
    std::shuffle(cs.begin(), cs.end(), rng);
    EXPECT_EQ(smith_normal_form(a).diagonal, smith_normal_form(a.submatrix(rs, cs)).diagonal);
  }
}
