#include <gtest/gtest.h>

#include <random>

#include "fpg/fpg.hpp"
#include "fpg/io/presentation_io.hpp"
#include "fpg/io/representation_io.hpp"

using namespace fpg;

namespace {

FieldPtr q8() { return NumberField::cyclotomic8(); }

Presentation fixture(const std::string& name) {
  return io::load_presentation(std::string(FPG_FIXTURE_DIR) + "/" + name).presentation;
}

SymbolicRepresentation rho1_symbolic() {
  return io::parse_representation(io::read_file(std::string(FPG_FIXTURE_DIR) + "/rho1.rep"));
}

NumberFieldElement one() { return NumberFieldElement(1).with_field(q8()); }

NFLaurent p_of_t(Sqrt2Convention c = Sqrt2Convention::Primary) {
  return NFLaurent(0, {one(), -sqrt2_element(q8(), c), one()});
}

NumberFieldElement random_element(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Rational> c;
  for (int i = 0; i < 4; ++i) c.emplace_back(d(rng));
  return NumberFieldElement(q8(), c);
}

NFMatrix random_invertible(std::mt19937& rng, std::size_t k) {
  for (;;) {
    NFMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m(i, j) = random_element(rng);
    if (!bareiss_determinant(m).is_zero()) return m;
  }
}

Representation random_free_rep(std::mt19937& rng, std::size_t gens, std::size_t k, std::vector<long> eps) {
  std::vector<NFMatrix> mats;
  for (std::size_t g = 0; g < gens; ++g) mats.push_back(random_invertible(rng, k));
  return Representation(q8(), std::move(mats), std::move(eps));
}

NFMatrix perm_matrix(const Perm& p) {
  NFMatrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(i, static_cast<std::size_t>(p[i])) = NumberFieldElement(1);
  return m;
}

Word random_word(std::mt19937& rng, std::size_t rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), gen(0, rank - 1);
  std::bernoulli_distribution inv(0.5);
  std::vector<Letter> ls;
  for (std::size_t k = len(rng); k > 0; --k) ls.push_back(make_letter(gen(rng), inv(rng) ? -1 : 1));
  return Word(ls);
}

const Word x = Word::generator(0), y = Word::generator(1);

BiLaurentPolynomial bl(std::initializer_list<std::pair<std::pair<long, long>, long>> terms) {
  BiLaurentPolynomial p;
  for (const auto& [e, c] : terms) p += BiLaurentPolynomial::monomial(c, e.first, e.second);
  return p;
}

}  // namespace

TEST(Fox, DerivativeExamples) {
  EXPECT_EQ(fox_derivative(x, 0), GroupRingElement(1));
  EXPECT_EQ(fox_derivative(x.inverse(), 0), -GroupRingElement(x.inverse()));
  EXPECT_EQ(fox_derivative(commutator(x, y), 0), GroupRingElement(1) - GroupRingElement(x * y * x.inverse()));
  EXPECT_TRUE(fox_derivative(y, 0).is_zero());
  try {
    fox_derivative(x, 2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownGenerator);
  }
}

TEST(Fox, MatrixExamples) {
  const auto f = fox_matrix(cyclic_group(4, "x"));
  ASSERT_EQ(f.rows, 1u);
  EXPECT_EQ(f(0, 0), GroupRingElement(1) + GroupRingElement(x) + GroupRingElement(x.pow(2)) + GroupRingElement(x.pow(3)));

  const auto c = fox_matrix(Presentation({"x", "y"}, {commutator(x, y)}));
  EXPECT_EQ(c(0, 0), GroupRingElement(1) - GroupRingElement(x * y * x.inverse()));
  EXPECT_EQ(c(0, 1), GroupRingElement(x) - GroupRingElement(commutator(x, y)));

  const auto g = fox_matrix(fixture("G1-xyw.pres"));
  EXPECT_EQ(g.rows, 3u);
  EXPECT_EQ(g.cols, 3u);
}

TEST(Fox, FundamentalIdentityOnRandomWords) {
  std::mt19937 rng(500);
  const auto rho = random_free_rep(rng, 3, 2, {1, -1, 2});
  for (int i = 0; i < 500; ++i) {
    const Word w = random_word(rng, 3, 12);
    EXPECT_TRUE(fox_identity_holds(w, 3));
    if (i % 5 == 0) {
      EXPECT_TRUE(fox_identity_holds_under(w, rho));
    }
  }
}

TEST(Fox, FundamentalIdentityOnFixtureRelators) {
  const auto p = fixture("G1-xyw.pres");
  const auto rho = select_convention(p, rho1_symbolic()).rep;
  for (const auto& r : p.relators()) {
    EXPECT_TRUE(fox_identity_holds(r, p.num_generators()));
    EXPECT_TRUE(fox_identity_holds_under(r, rho));
  }
}

TEST(Representation, TrivialRepresentationVerifies) {
  const auto p = fixture("G1-xyuv.pres");
  std::vector<NFMatrix> mats(p.num_generators(), NFMatrix::identity(2));
  const Representation triv(q8(), mats, std::vector<long>(p.num_generators(), 0));
  EXPECT_TRUE(verify_representation(p, triv).ok);
}

TEST(Representation, Rho1VerifiesUnderSelectedConvention) {
  const auto p = fixture("G1-xyw.pres");
  const auto choice = select_convention(p, rho1_symbolic());
  EXPECT_EQ(choice.convention, Sqrt2Convention::Primary);
  EXPECT_TRUE(verify_representation(p, choice.rep).ok);
  // both conventions satisfy the relators; the Delta0 pin decides
  EXPECT_EQ(choice.passing.size(), 2u);
  EXPECT_TRUE(choice.pinned_by_delta0);
}

TEST(Representation, NegatedMatrixFails) {
  const auto p = fixture("G1-xyw.pres");
  const auto rho = select_convention(p, rho1_symbolic()).rep;
  std::vector<NFMatrix> mats{rho.matrix(0), rho.matrix(1), -rho.matrix(2)};
  const Representation bad(q8(), mats, rho.eps());
  const auto rep = verify_representation(p, bad);
  EXPECT_FALSE(rep.ok);
  EXPECT_FALSE(rep.failing_relator.empty());
}

TEST(Representation, DimensionMismatchFails) {
  const auto p = fixture("G1-xyw.pres");
  const Representation small(q8(), {NFMatrix::identity(2)}, {0});
  try {
    verify_representation(p, small);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(Twisted, PaperValuesForRho1) {
  const auto p = fixture("G1-xyw.pres");
  const auto choice = select_convention(p, rho1_symbolic());
  const auto r = twisted_alexander_wada(p, choice.rep, 0);
  const NFLaurent pt = p_of_t();
  EXPECT_EQ(r.delta1, pt * pt);
  EXPECT_EQ(r.delta0, pt);
  ASSERT_TRUE(r.wada.exact);
  EXPECT_EQ(r.wada.quotient, pt);
  ASSERT_TRUE(r.delta.exact);
  EXPECT_EQ(r.delta.quotient, pt);
  const auto s = sqrt2_element(q8(), choice.convention);
  EXPECT_EQ(r.delta.quotient.to_string("t", [&](const NumberFieldElement& c) { return render_with_sqrt2(c, s); }),
            "t^2 - sqrt2*t + 1");
}

TEST(Twisted, AutoDeletionPicksFirstGenerator) {
  const auto p = fixture("G1-xyw.pres");
  const auto rho = select_convention(p, rho1_symbolic()).rep;
  EXPECT_EQ(twisted_alexander_wada(p, rho).deleted, 0u);
}

TEST(Twisted, FreeGroupGivesOne) {
  std::mt19937 rng(20);
  const auto f2 = Presentation::free_group(2);
  for (int i = 0; i < 20; ++i) {
    const auto rho = random_free_rep(rng, 2, 2, {1, 1});
    ASSERT_TRUE(verify_representation(f2, rho).ok);
    const auto r = twisted_alexander_wada(f2, rho);
    ASSERT_TRUE(r.delta.exact);
    EXPECT_EQ(r.delta.quotient, NFLaurent(one()));
  }
}

TEST(Twisted, TietzeEquivalentFreePresentationsGiveOne) {
  std::mt19937 rng(21);
  // <x, y, z | z y^-1 x^-1> is F2 after eliminating z
  const Presentation p({"x", "y", "z"}, {Word::generator(2) * y.inverse() * x.inverse()});
  for (int i = 0; i < 5; ++i) {
    auto base = random_free_rep(rng, 2, 2, {1, 1});
    const Representation rho(q8(), {base.matrix(0), base.matrix(1), base.matrix(0) * base.matrix(1)}, {1, 1, 2});
    ASSERT_TRUE(verify_representation(p, rho).ok);
    const auto r = twisted_alexander_wada(p, rho);
    ASSERT_TRUE(r.delta.exact);
    EXPECT_EQ(r.delta.quotient, NFLaurent(one()));
  }
}

TEST(Twisted, InvalidGradingIsRejected) {
  // <x | x^2> with rho(x) = -I: the grading eps(x) = 1 gives the relator eps-sum 2
  const auto p = cyclic_group(2, "x");
  const Representation rho(q8(), {-NFMatrix::identity(2)}, {1});
  EXPECT_FALSE(verify_representation(p, rho).ok);
  try {
    twisted_alexander_wada(p, rho);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RepresentationNotVerified);
  }
}

TEST(Twisted, NoDeletableGenerator) {
  const auto p = Presentation::free_group(1);
  const Representation rho(q8(), {NFMatrix::identity(2)}, {0});
  try {
    twisted_alexander_wada(p, rho);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoDeletableGenerator);
  }
}

TEST(Twisted, DeletionIndependenceOnRho1) {
  const auto p = fixture("G1-xyw.pres");
  const auto rho = select_convention(p, rho1_symbolic()).rep;
  const auto a = twisted_alexander_wada(p, rho, 0), b = twisted_alexander_wada(p, rho, 1);
  ASSERT_EQ(b.deleted, 1u);
  EXPECT_EQ(a.wada.numerator, b.wada.numerator);
  EXPECT_EQ(a.wada.denominator, b.wada.denominator);
  EXPECT_EQ(a.delta.numerator, b.delta.numerator);
}

TEST(Twisted, DeletionIndependenceOnTrefoilPermutationRep) {
  const auto p = fixture("trefoil.pres");
  const Representation rho(q8(), {perm_matrix({1, 0, 2}), perm_matrix({0, 2, 1})}, {1, 1});
  ASSERT_TRUE(verify_representation(p, rho).ok);
  const auto a = twisted_alexander_wada(p, rho, 0), b = twisted_alexander_wada(p, rho, 1);
  EXPECT_EQ(a.wada.numerator, b.wada.numerator);
  EXPECT_EQ(a.wada.denominator, b.wada.denominator);
  EXPECT_EQ(a.delta.numerator, b.delta.numerator);
  EXPECT_EQ(a.delta.denominator, b.delta.denominator);
}

TEST(Twisted, InvariantUnderAddingRedundantGenerator) {
  const auto p = fixture("G1-xyw.pres");
  const auto rho = select_convention(p, rho1_symbolic()).rep;
  // add z with relator z (x y)^-1
  auto gens = p.generators();
  gens.push_back("z");
  auto rels = p.relators();
  rels.push_back(Word::generator(3) * (x * y).inverse());
  const Presentation q(gens, rels);
  const Representation rho_q(q8(), {rho.matrix(0), rho.matrix(1), rho.matrix(2), rho.matrix(0) * rho.matrix(1)},
                             {1, 1, 0, 2});
  const auto a = twisted_alexander_wada(p, rho, 0), b = twisted_alexander_wada(q, rho_q, 0);
  EXPECT_EQ(a.delta1, b.delta1);
  EXPECT_EQ(a.wada.numerator, b.wada.numerator);
  EXPECT_EQ(a.delta.numerator, b.delta.numerator);
  EXPECT_EQ(a.delta.denominator, b.delta.denominator);
}

TEST(Classical, TrefoilGcd) {
  const auto p = fixture("trefoil.pres");
  const auto g = alexander_poly_gcds(p, {{1, 0}, {1, 0}});
  ASSERT_EQ(g.gcds.size(), 1u);
  EXPECT_EQ(g.gcds[0], bl({{{2, 0}, 1}, {{1, 0}, -1}, {{0, 0}, 1}}));
  EXPECT_EQ(g.rank, 1u);
}

TEST(Classical, FreeGroupHasNoRelators) {
  const auto g = alexander_poly_gcds(Presentation::free_group(2), {{1, 0}, {0, 1}});
  EXPECT_TRUE(g.no_relators);
  EXPECT_TRUE(g.gcds.empty());
  EXPECT_EQ(g.relevant(), BiLaurentPolynomial(1));
}

TEST(Classical, InconsistentGradingFails) {
  try {
    alexander_poly_gcds(cyclic_group(2, "x"), {{1, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InconsistentGrading);
  }
}

TEST(Classical, PaperPresentationsHaveUnitGcds) {
  const auto g2 = alexander_poly_gcds(fixture("G1-xyw.pres"), {{1, 0}, {0, 1}, {0, 0}});
  EXPECT_TRUE(is_unit(g2.relevant()));
  EXPECT_EQ(g2.gcds, (std::vector<BiLaurentPolynomial>{1, 0, 0}));
  const auto g1 = alexander_poly_gcds(fixture("G1-xyuv.pres"), {{1, 0}, {0, 1}, {0, 0}, {0, 0}});
  EXPECT_TRUE(is_unit(g1.relevant()));
}
