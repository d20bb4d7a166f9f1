#include <gtest/gtest.h>

#include "joinalg/classical.hpp"
#include "oracles.hpp"

using namespace joinalg;

namespace {

FiniteGSet regular_set(const std::string& g) { return FiniteGSet::regular(FiniteGroup::named(g)); }

}  // namespace

TEST(GSet, Validation) {
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  EXPECT_THROW(FiniteGSet(z2, {{1, 1}, {0, 0}}), MalformedInput);  // identity moves points
  EXPECT_THROW(FiniteGSet(z2, {{0, 2}}), MalformedInput);
  EXPECT_THROW(FiniteGSet(FiniteGroup::cyclic(3), {{0, 1, 0}, {1, 0, 1}}), MalformedInput);
}

TEST(GSet, Freeness) {
  for (const auto& g : {"Z/2", "Z/3", "Z/4", "S3"}) EXPECT_TRUE(is_free(regular_set(g))) << g;
  EXPECT_FALSE(is_free(FiniteGSet::trivial(FiniteGroup::cyclic(3), 2)));
  // Z/4 acting on Z/2 through the quotient.
  const FiniteGroup z4 = FiniteGroup::cyclic(4);
  std::vector<std::vector<std::size_t>> action(2, std::vector<std::size_t>(4));
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t g = 0; g < 4; ++g) action[x][g] = (x + g) % 2;
  EXPECT_FALSE(is_free(FiniteGSet(z4, action)));
}

// Z/2 actions on n points are involutions, Z/3 actions are permutations of order dividing 3.
TEST(GSet, EnumerationCounts) {
  const std::vector<std::size_t> involutions = {1, 2, 4, 10};
  const std::vector<std::size_t> order3 = {1, 1, 3, 9};
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_EQ(enumerate_actions(FiniteGroup::cyclic(2), n).size(), involutions[n - 1]);
    EXPECT_EQ(enumerate_actions(FiniteGroup::cyclic(3), n).size(), order3[n - 1]);
  }
}

TEST(FunComodule, Examples) {
  const ComoduleAlgebra t = fun_comodule(FiniteGSet::trivial(FiniteGroup::trivial(), 3));
  EXPECT_EQ(t.coaction, Matrix::identity(3));
  const ComoduleAlgebra two = fun_comodule(FiniteGSet::disjoint_union(regular_set("Z/2"), regular_set("Z/2")));
  EXPECT_TRUE(check_comodule(two).ok());
  EXPECT_EQ(coinvariants(two).subspace.dim(), 2u);
}

TEST(DiscreteJoin, Counts) {
  EXPECT_EQ(discrete_join(2, 2, 2).classes, 8u);
  for (std::size_t nx = 1; nx <= 4; ++nx)
    for (std::size_t ny = 1; ny <= 4; ++ny)
      for (std::size_t m = 1; m <= 4; ++m) {
        const std::size_t n = discrete_join(nx, ny, m).classes;
        EXPECT_EQ(n, oracle::join_points(nx, ny, m));
        EXPECT_EQ(n, ny + (m - 1) * nx * ny + nx);
      }
  EXPECT_EQ(discrete_join(3, 2, 1).classes, 5u);
  EXPECT_EQ(discrete_join(3, 1, 3).classes, 1u + 2u * 3u + 3u);  // cone
}

TEST(GaugedJoin, Counts) {
  for (const auto& g : {"Z/2", "Z/3"})
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& x : enumerate_actions(FiniteGroup::named(g), n))
        for (std::size_t m = 1; m <= 3; ++m) EXPECT_EQ(gauged_join(x, m).classes, oracle::gauged_points(x, m));
}

TEST(GaugedJoinIso, FreeCorpus) {
  for (const auto& g : {"Z/2", "Z/3", "Z/4"})
    for (std::size_t m = 1; m <= 3; ++m) {
      const JoinMapCheck c = gauged_join_iso(regular_set(g), m);
      EXPECT_TRUE(c.verdict()) << g << " m=" << m;
    }
  EXPECT_EQ(gauged_join_iso(regular_set("Z/2"), 2).join.classes, 8u);
  EXPECT_TRUE(gauged_join_iso(FiniteGSet::disjoint_union(regular_set("Z/2"), regular_set("Z/2")), 2).verdict());
}

TEST(GaugedJoinIso, UntwistedMapIsNotWellDefined) {
  const FiniteGSet x = regular_set("Z/2");
  const JoinMapCheck c = check_join_map(x, 2, [](std::size_t t, std::size_t p, std::size_t h) {
    return std::array<std::size_t, 3>{t, p, h};
  });
  EXPECT_FALSE(c.well_defined);
  EXPECT_FALSE(c.verdict());
}

// The twist [(t,x,h)] ↦ [(t,xh⁻¹,h)] respects both collapses for any action.
TEST(GaugedJoinIso, TwistIsWellDefinedForNonFreeActions) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& x : enumerate_actions(FiniteGroup::cyclic(2), n)) {
      const JoinMapCheck c = gauged_join_iso(x, 2);
      EXPECT_TRUE(c.well_defined);
      EXPECT_TRUE(c.bijective);
    }
}

TEST(FunOfJoin, Isomorphisms) {
  for (std::size_t nx = 1; nx <= 3; ++nx)
    for (std::size_t ny = 1; ny <= 3; ++ny)
      for (std::size_t m = 1; m <= 3; ++m) {
        const JoinFusionCheck c = fun_of_join_vs_fusion(nx, ny, m);
        EXPECT_TRUE(c.report.ok()) << nx << "x" << ny << " m=" << m;
        EXPECT_EQ(oracle::rank(c.isomorphism), oracle::join_points(nx, ny, m));
      }
  EXPECT_EQ(fun_of_join_vs_fusion(1, 1, 3).join.classes, 4u);
}

TEST(DiagonalFreeness, Examples) {
  for (const auto& g : {"Z/2", "Z/3"}) {
    const DiagonalFreeness d = diagonal_join_freeness(regular_set(g), 2);
    EXPECT_TRUE(d.action_free) << g;
    EXPECT_TRUE(d.fusion_principality.principal) << g;
  }
  EXPECT_THROW(diagonal_join_freeness(FiniteGSet::trivial(FiniteGroup::cyclic(2), 2), 2), PreconditionFailed);
}

TEST(Freeness, MatchesGaloisAndPrincipality) {
  for (const auto& g : {"Z/2", "Z/3"})
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& x : enumerate_actions(FiniteGroup::named(g), n)) {
        const ComoduleAlgebra pa = fun_comodule(x);
        const bool free = is_free(x);
        EXPECT_EQ(canonical_map(pa, balanced_tensor(pa, coinvariants(pa))).bijective, free);
        EXPECT_EQ(is_principal(pa).principal, free);
      }
}
