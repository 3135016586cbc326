#include <gtest/gtest.h>

#include <filesystem>
#include <numeric>
#include <random>

#include "fpg/fpg.hpp"
#include "fpg/io/misc_io.hpp"
#include "fpg/io/presentation_io.hpp"

using namespace fpg;

namespace {

std::string fixture_path(const std::string& name) { return std::string(FPG_FIXTURE_DIR) + "/" + name; }

Presentation fixture(const std::string& name) { return io::load_presentation(fixture_path(name)).presentation; }

std::vector<std::string> presentation_fixtures() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(FPG_FIXTURE_DIR))
    if (e.path().extension() == ".pres") out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

AbelianInvariants ab(std::size_t free_rank, std::vector<long> torsion = {}) {
  AbelianInvariants a;
  a.free_rank = free_rank;
  for (long t : torsion) a.torsion.emplace_back(t);
  return a;
}

BraidWord random_braid(std::mt19937& rng, std::size_t strands, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, static_cast<int>(strands) - 1);
  std::bernoulli_distribution inv(0.5);
  BraidWord b{strands, {}};
  for (std::size_t k = len(rng); k > 0; --k) b.letters.push_back(inv(rng) ? -idx(rng) : idx(rng));
  return b;
}

/// Number of orbits of the strand permutations induced by the braids.
std::size_t strand_orbits(std::size_t n, const std::vector<BraidWord>& braids) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& b : braids) {
    std::vector<std::size_t> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    for (int l : b.letters) {
      const std::size_t i = static_cast<std::size_t>(std::abs(l)) - 1;
      std::swap(pos[i], pos[i + 1]);
    }
    for (std::size_t i = 0; i < n; ++i) parent[find(i)] = find(pos[i]);
  }
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < n; ++i) orbits += find(i) == i;
  return orbits;
}

BraidWord conjugate(const BraidWord& b, const BraidWord& c) {
  BraidWord out{b.strands, {}};
  for (auto it = c.letters.rbegin(); it != c.letters.rend(); ++it) out.letters.push_back(-*it);
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  out.letters.insert(out.letters.end(), c.letters.begin(), c.letters.end());
  return out;
}

}  // namespace

TEST(Zvk, Examples) {
  const auto f3 = zvk_presentation(3, {});
  EXPECT_EQ(f3.num_generators(), 3u);
  EXPECT_EQ(f3.num_relators(), 0u);

  const auto s1 = tietze_simplify(zvk_presentation(2, {BraidWord{2, {1}}}));
  EXPECT_TRUE(s1.free);
  EXPECT_EQ(s1.free_rank(), 1u);

  const auto s11 = zvk_presentation(2, {BraidWord{2, {1, 1}}});
  EXPECT_EQ(s11.num_relators(), 2u);
  EXPECT_EQ(abelianization(s11), ab(2));
  const auto simplified = tietze_simplify(s11).presentation;
  EXPECT_EQ(simplified.num_generators(), 2u);
  EXPECT_EQ(simplified.num_relators(), 1u);
  // Z^2 has 18 homomorphisms to S3 (commuting pairs)
  EXPECT_EQ(count_homs(simplified, 3).total, Integer(18));
}

TEST(Zvk, FixtureBraidsMatchExamples) {
  const auto b = io::parse_braids(io::read_file(fixture_path("sigma1-squared.braid")));
  EXPECT_EQ(abelianization(zvk_presentation(b.strands, b.braids)), ab(2));
}

TEST(Zvk, StrandMismatchFails) {
  try {
    zvk_presentation(3, {BraidWord{2, {1}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StrandMismatch);
  }
}

TEST(Zvk, FirstHomologyCountsStrandOrbitsAndIsConjugationInvariant) {
  std::mt19937 rng(61);
  for (std::size_t n = 2; n <= 4; ++n)
    for (int i = 0; i < 25; ++i) {
      std::vector<BraidWord> braids{random_braid(rng, n, 8), random_braid(rng, n, 8)};
      const auto h1 = abelianization(zvk_presentation(n, braids));
      EXPECT_EQ(h1, ab(strand_orbits(n, braids)));
      const BraidWord c = random_braid(rng, n, 5);
      std::vector<BraidWord> conj;
      for (const auto& b : braids) conj.push_back(conjugate(b, c));
      EXPECT_EQ(abelianization(zvk_presentation(n, conj)), h1);
    }
}

TEST(Cw, IdentityMonodromyRankOne) {
  const auto p = cw_fibration_presentation({1, 1, {FreeEndomorphism::identity(1)}});
  EXPECT_EQ(p.num_relators(), 1u);
  EXPECT_EQ(abelianization(p), ab(2));
}

TEST(Cw, IdentityMonodromiesGiveDirectProduct) {
  const auto p = cw_fibration_presentation({2, 3, {FreeEndomorphism::identity(3), FreeEndomorphism::identity(3)}});
  EXPECT_EQ(p.num_relators(), 6u);
  EXPECT_EQ(p.euler_characteristic(), 2);
  std::vector<Word> comms;
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < 3; ++i) comms.push_back(commutator(Word::generator(k), Word::generator(2 + i)));
  const Presentation direct(p.generators(), comms);
  EXPECT_EQ(count_homs(p, 3).total, count_homs(direct, 3).total);
  EXPECT_EQ(abelianization(p), ab(5));
}

TEST(Cw, IdentityFixtureMatchesFormula) {
  const auto m = io::parse_monodromy(io::read_file(fixture_path("cw-identity.mono")));
  const auto p = cw_fibration_presentation(m);
  EXPECT_EQ(p.euler_characteristic(), 1 - static_cast<long>(m.loops + m.fiber_rank) +
                                          static_cast<long>(m.loops * m.fiber_rank));
}

TEST(Cw, ShearMonodromy) {
  const auto m = io::parse_monodromy(io::read_file(fixture_path("cw-shear.mono")));
  const auto p = cw_fibration_presentation(m);
  EXPECT_EQ(p.num_relators(), 2u);
  // the relator for x1 abelianizes to x2 = 0, leaving Z (gamma) + Z (x1)
  EXPECT_EQ(abelianization(p), ab(2));
}

TEST(Cw, RankMismatchFails) {
  try {
    cw_fibration_presentation({1, 2, {FreeEndomorphism::identity(3)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankMismatch);
  }
  try {
    cw_fibration_presentation({2, 2, {FreeEndomorphism::identity(2)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankMismatch);
  }
}

TEST(Homology, Examples) {
  for (long d : {1, 2, 5}) {
    const auto h = presentation_homology(cyclic_group(d, "x"));
    EXPECT_EQ(h.h1, d == 1 ? ab(0) : ab(0, {d}));
    EXPECT_EQ(h.h2, ab(0));
  }
  const Word x = Word::generator(0), y = Word::generator(1);
  const auto torus = presentation_homology(Presentation({"x", "y"}, {commutator(x, y)}));
  EXPECT_EQ(torus.h1, ab(2));
  EXPECT_EQ(torus.h2, ab(1));
  const auto f3 = presentation_homology(Presentation::free_group(3));
  EXPECT_EQ(f3.h1, ab(3));
  EXPECT_EQ(f3.h2, ab(0));
}

TEST(Homology, RankIdentitiesOnFixtures) {
  for (const auto& name : presentation_fixtures()) {
    const auto p = fixture(name);
    const auto h = presentation_homology(p);
    EXPECT_EQ(h.h2.free_rank, p.num_relators() - h.boundary_rank) << name;
    EXPECT_EQ(h.euler_characteristic, 1 - static_cast<long>(h.h1.free_rank) + static_cast<long>(h.h2.free_rank))
        << name;
  }
}

TEST(Wedge, Examples) {
  const auto point = wedge_homotopy_type(0, 2);
  EXPECT_EQ(point.circles, 0);
  EXPECT_EQ(point.spheres, 0);
  const auto circle = wedge_homotopy_type(1, 3);
  EXPECT_EQ(circle.circles, 1);
  EXPECT_EQ(circle.spheres, 0);
  const auto conic = wedge_homotopy_type(0, 2, 2);
  EXPECT_TRUE(conic.cyclic);
  EXPECT_EQ(conic.order, 2);
  EXPECT_EQ(conic.spheres, 0);
  EXPECT_EQ(wedge_homotopy_type(2, 1).spheres, 3);
}

TEST(Wedge, NegativeSpheresRejected) {
  try {
    wedge_homotopy_type(0, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InconsistentInput);
  }
}

TEST(KernelRankFormula, Examples) {
  EXPECT_EQ(orbifold_kernel_rank({0, 2, {2, 3}}, 6), 8);
  EXPECT_EQ(orbifold_kernel_rank({0, 4, {}}, 1), 3);
  EXPECT_EQ(orbifold_kernel_rank({0, 1, {2, 3}}, 6), 2);
  EXPECT_EQ(orbifold_kernel_rank({0, 1, {2, 5}}, 10), 4);
}

TEST(KernelRankFormula, AgreesWithCoprimeFormula) {
  for (long r = 0; r <= 2; ++r)
    for (const auto& [p, q] : std::vector<std::pair<long, long>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}})
      EXPECT_EQ(orbifold_kernel_rank({0, static_cast<std::size_t>(r + 1), {p, q}}, p * q), kernel_rank_expected(r, p, q));
}

TEST(KernelRankFormula, BadLcmFails) {
  try {
    orbifold_kernel_rank({0, 1, {2, 3}}, 12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadLcm);
  }
}

TEST(Threshold, PaperFixture) {
  const auto t = io::parse_threshold(io::read_file(fixture_path("threshold-f6.thr")));
  EXPECT_TRUE(monotonicity_violations(t).empty());
  const auto mins = threshold_minimal_sets(t);
  std::vector<std::string> got;
  for (auto m : mins) got.push_back(t.subset_string(m));
  EXPECT_EQ(got, (std::vector<std::string>{"{4,4i}", "{4,-4i}", "{-4,4i}", "{-4,-4i}"}));
}

TEST(Threshold, TrivialTables) {
  auto all = ThresholdInstance::with_values({"a", "b", "c"});
  std::fill(all.member.begin(), all.member.end(), true);
  EXPECT_EQ(threshold_minimal_sets(all), (std::vector<std::uint32_t>{0}));

  auto top = ThresholdInstance::with_values({"a", "b", "c"});
  top.member.back() = true;
  EXPECT_EQ(threshold_minimal_sets(top), (std::vector<std::uint32_t>{7}));
}

TEST(Threshold, MonotonicityViolationFails) {
  auto t = ThresholdInstance::with_values({"a", "b"});
  t.member[1] = true;  // {a} but not {a,b}
  EXPECT_FALSE(monotonicity_violations(t).empty());
  try {
    threshold_minimal_sets(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MonotonicityViolation);
  }
}

TEST(Threshold, AntichainAndCoverOnRandomUpsets) {
  std::mt19937 rng(71);
  for (int i = 0; i < 50; ++i) {
    auto t = ThresholdInstance::with_values({"a", "b", "c", "d", "e"});
    std::uniform_int_distribution<std::uint32_t> pick(0, 31);
    std::vector<std::uint32_t> gens{pick(rng), pick(rng), pick(rng)};
    for (std::uint32_t m = 0; m < 32; ++m)
      for (auto g : gens)
        if ((m & g) == g) t.member[m] = true;
    const auto mins = threshold_minimal_sets(t);
    for (auto a : mins)
      for (auto b : mins)
        if (a != b) {
          EXPECT_NE(a & b, a);
        }
    for (std::uint32_t m = 0; m < 32; ++m) {
      if (!t.member[m]) continue;
      bool covered = false;
      for (auto a : mins) covered = covered || (m & a) == a;
      EXPECT_TRUE(covered);
    }
  }
}
