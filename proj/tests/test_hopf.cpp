#include <gtest/gtest.h>

#include "joinalg/hopf.hpp"
#include "oracles.hpp"

using namespace joinalg;

namespace {

const std::vector<std::string> kGroups = {"Z/2", "Z/3", "Z/4", "Z/2xZ/2", "S3"};

}  // namespace

TEST(Group, Builtins) {
  for (const auto& name : kGroups) EXPECT_NO_THROW(FiniteGroup::named(name)) << name;
  EXPECT_EQ(FiniteGroup::named("S3").order(), 6u);
  EXPECT_FALSE(FiniteGroup::named("S3").is_abelian());
  EXPECT_TRUE(FiniteGroup::named("Z/2xZ/2").is_abelian());
  EXPECT_THROW(FiniteGroup::named("Q8x"), MalformedInput);
  EXPECT_THROW(FiniteGroup({{0, 1}, {0, 1}}), MalformedInput);
}

TEST(FunctionHopf, Axioms) {
  for (const auto& name : kGroups) {
    const FiniteGroup g = FiniteGroup::named(name);
    const HopfAlgebra h = function_hopf(g);
    EXPECT_TRUE(check_hopf(h).ok()) << name;
    EXPECT_EQ(h.coproduct, oracle::convolution_coproduct(g)) << name;
  }
}

TEST(GroupHopf, Axioms) {
  for (const auto& name : kGroups) EXPECT_TRUE(check_hopf(group_hopf(FiniteGroup::named(name))).ok()) << name;
}

TEST(FunctionHopf, Examples) {
  const HopfAlgebra k = function_hopf(FiniteGroup::trivial());
  EXPECT_EQ(k.dim(), 1u);
  EXPECT_EQ(k.antipode, Matrix::identity(1));

  const HopfAlgebra z2 = function_hopf(FiniteGroup::cyclic(2));
  EXPECT_EQ(z2.dim(), 2u);
  Vector d0 = z2.coproduct.column(0);
  EXPECT_EQ(d0, Vector({1, 0, 0, 1}));

  const HopfAlgebra s3 = function_hopf(FiniteGroup::symmetric3());
  EXPECT_EQ(s3.dim(), 6u);
  EXPECT_NE(s3.antipode, Matrix::identity(6));
  EXPECT_EQ(s3.antipode * s3.antipode, Matrix::identity(6));
}

TEST(GroupHopf, Antipode) {
  EXPECT_EQ(group_hopf(FiniteGroup::trivial()).dim(), 1u);
  EXPECT_EQ(group_hopf(FiniteGroup::cyclic(2)).antipode, Matrix::identity(2));
  const Matrix s = group_hopf(FiniteGroup::cyclic(3)).antipode;
  EXPECT_EQ(s(0, 0), Scalar(1));
  EXPECT_EQ(s(2, 1), Scalar(1));
  EXPECT_EQ(s(1, 2), Scalar(1));
}

TEST(CheckHopf, ZeroAntipodeFails) {
  HopfAlgebra h = function_hopf(FiniteGroup::cyclic(2));
  h = make_hopf(h.algebra, h.coproduct, h.counit, Matrix(2, 2));
  const Report r = check_hopf(h);
  EXPECT_EQ(r.status("left_antipode"), false);
  EXPECT_EQ(r.status("right_antipode"), false);
  EXPECT_EQ(r.status("coassociativity"), true);
}

TEST(Sweedler, Legs) {
  const FiniteGroup g = FiniteGroup::cyclic(2);
  const HopfAlgebra h = function_hopf(g);
  EXPECT_EQ(sweedler_legs(h, 2), h.coproduct);
  const Matrix three = sweedler_legs(h, 3);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t x = 0; x < 2; ++x)
          EXPECT_EQ(three((a * 2 + b) * 2 + c, x), Scalar(g.mul(g.mul(a, b), c) == x ? 1 : 0));
  EXPECT_EQ(kron(h.coproduct, Matrix::identity(2)) * h.coproduct,
            kron(Matrix::identity(2), h.coproduct) * h.coproduct);
  EXPECT_THROW(sweedler_legs(h, 1), std::invalid_argument);
}

// Single-entry mutations of Δ, ε or S must each break a named axiom.
TEST(CheckHopf, RandomSingleEntryMutations) {
  std::mt19937 rng(7);
  for (const auto& name : kGroups) {
    for (const bool group_side : {false, true}) {
      const FiniteGroup g = FiniteGroup::named(name);
      const HopfAlgebra base = group_side ? group_hopf(g) : function_hopf(g);
      for (int trial = 0; trial < 20; ++trial) {
        Matrix delta = base.coproduct, eps = base.counit, s = base.antipode;
        Matrix* target = trial % 3 == 0 ? &delta : trial % 3 == 1 ? &eps : &s;
        std::uniform_int_distribution<std::size_t> row(0, target->rows() - 1), col(0, target->cols() - 1);
        const std::size_t r = row(rng), c = col(rng);
        (*target)(r, c) += 1;
        const Report rep = check_hopf(make_hopf(base.algebra, delta, eps, s));
        ASSERT_FALSE(rep.ok()) << name << " trial " << trial;
        EXPECT_FALSE(rep.first_failure()->axiom.empty());
      }
    }
  }
}
