#include <gtest/gtest.h>

#include "joinalg/classical.hpp"
#include "joinalg/comodule.hpp"
#include "oracles.hpp"

using namespace joinalg;

namespace {

ComoduleAlgebra trivial_coaction(const Algebra& p, const HopfAlgebra& h) {
  Matrix unit_h(h.dim(), 1);
  unit_h.set_column(0, h.algebra.unit());
  return {p, h, kron(Matrix::identity(p.dim()), unit_h)};
}

ComoduleAlgebra regular(const std::string& g) { return fun_comodule(FiniteGSet::regular(FiniteGroup::named(g))); }

ComoduleAlgebra point_under_z2() { return fun_comodule(FiniteGSet::trivial(FiniteGroup::cyclic(2), 1)); }

ComoduleAlgebra two_free_orbits() {
  const FiniteGSet r = FiniteGSet::regular(FiniteGroup::cyclic(2));
  return fun_comodule(FiniteGSet::disjoint_union(r, r));
}

}  // namespace

TEST(CheckComodule, Examples) {
  EXPECT_TRUE(check_comodule(trivial_coaction(matrix_algebra(2), function_hopf(FiniteGroup::cyclic(2)))).ok());
  EXPECT_TRUE(check_comodule(regular("Z/2")).ok());

  // Direct transcription of δ(f)(x, g) = f(x·g) for the regular action.
  const FiniteGroup z2 = FiniteGroup::cyclic(2);
  Matrix by_hand(4, 2);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t g = 0; g < 2; ++g) by_hand(x * 2 + g, z2.mul(x, g)) = 1;
  EXPECT_EQ(regular("Z/2").coaction, by_hand);

  ComoduleAlgebra flipped = regular("Z/2");
  for (std::size_t r = 0; r < 4; ++r) flipped.coaction(r, 1) = -flipped.coaction(r, 1);
  const Report rep = check_comodule(flipped);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(rep.status("coassociativity") == false || rep.status("coaction_multiplicative") == false);
}

TEST(Coinvariants, Examples) {
  const ComoduleAlgebra t = trivial_coaction(function_algebra({"a", "b", "c"}), function_hopf(FiniteGroup::cyclic(2)));
  EXPECT_EQ(coinvariants(t).subspace, Subspace::full(3));
  for (const auto& g : {"Z/2", "Z/3", "Z/4", "S3"}) {
    const Subalgebra b = coinvariants(regular(g));
    EXPECT_EQ(b.subspace.dim(), 1u) << g;
    EXPECT_TRUE(b.subspace.contains(regular(g).algebra.unit()));
  }
  EXPECT_EQ(coinvariants(two_free_orbits()).subspace.dim(), 2u);
}

TEST(Coinvariants, MatchOrbitCountOnEveryAction) {
  for (const auto& g : {"Z/2", "Z/3"}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (const auto& x : enumerate_actions(FiniteGroup::named(g), n)) {
        EXPECT_EQ(coinvariants(fun_comodule(x)).subspace.dim(), oracle::orbit_count(x));
      }
    }
  }
}

TEST(BalancedTensor, Dimensions) {
  const ComoduleAlgebra reg = regular("Z/2");
  EXPECT_EQ(balanced_tensor(reg, coinvariants(reg)).dim(), 4u);

  const Algebra p = matrix_algebra(2);
  const ComoduleAlgebra t = trivial_coaction(p, trivial_hopf());
  EXPECT_EQ(balanced_tensor(t, coinvariants(t)).dim(), 4u);  // P ⊗_P P ≅ P
  const Subalgebra scalars = subalgebra_from_subspace(p, Subspace::span(4, {p.unit()}));
  EXPECT_EQ(balanced_tensor(t, scalars).dim(), 16u);
}

TEST(CanonicalMap, Examples) {
  const ComoduleAlgebra t = trivial_coaction(function_algebra({"a", "b"}), trivial_hopf());
  const CanonicalMap ct = canonical_map(t, balanced_tensor(t, coinvariants(t)));
  EXPECT_TRUE(ct.bijective);

  const ComoduleAlgebra reg = regular("Z/2");
  const CanonicalMap cr = canonical_map(reg, balanced_tensor(reg, coinvariants(reg)));
  EXPECT_TRUE(cr.well_defined);
  EXPECT_EQ(cr.matrix.rows(), 4u);
  EXPECT_EQ(cr.matrix.cols(), 4u);
  EXPECT_EQ(oracle::rank(cr.matrix), 4u);
  EXPECT_TRUE(cr.bijective);

  const ComoduleAlgebra pt = point_under_z2();
  const CanonicalMap cp = canonical_map(pt, balanced_tensor(pt, coinvariants(pt)));
  EXPECT_FALSE(cp.bijective);
  EXPECT_EQ(cp.matrix.cols(), 1u);
  EXPECT_EQ(cp.matrix.rows(), 2u);
}

TEST(LiftedCanonical, Examples) {
  const ComoduleAlgebra reg = regular("Z/2");
  const Matrix can = lifted_canonical(reg);
  EXPECT_EQ(can.cols(), 4u);
  EXPECT_EQ(oracle::rank(can), 4u);
  // q = 1: p⊗1 ↦ p⊗1
  const Vector one_h = reg.hopf.algebra.unit();
  for (std::size_t p = 0; p < 2; ++p) {
    const Vector pq = kron(unit_vector(2, p), reg.algebra.unit());
    EXPECT_EQ(can.apply(pq), kron(unit_vector(2, p), one_h));
  }
  const ComoduleAlgebra t = trivial_coaction(function_algebra({"a", "b"}), function_hopf(FiniteGroup::cyclic(2)));
  const Matrix ct = lifted_canonical(t);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q)
      EXPECT_EQ(ct.column(p * 2 + q), kron(t.algebra.multiply(unit_vector(2, p), unit_vector(2, q)), one_h));
}

TEST(DeltaLeft, Examples) {
  const ComoduleAlgebra t = trivial_coaction(function_algebra({"a", "b", "c"}), function_hopf(FiniteGroup::cyclic(2)));
  Matrix unit_h(2, 1);
  unit_h.set_column(0, t.hopf.algebra.unit());
  EXPECT_EQ(delta_left(t), kron(unit_h, Matrix::identity(3)));

  for (const auto& name : {"Z/2", "Z/3", "S3"}) {
    const FiniteGroup g = FiniteGroup::named(name);
    const ComoduleAlgebra reg = regular(name);
    const std::size_t n = g.order();
    // (S⁻¹ ⊗ id) flip δ on δ_x is Σ_k δ_k ⊗ δ_{xk}.
    Matrix expected(n * n, n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t k = 0; k < n; ++k) expected(k * n + g.mul(x, k), x) = 1;
    const Matrix dl = delta_left(reg);
    EXPECT_EQ(dl, expected) << name;
    EXPECT_EQ(kron(reg.hopf.counit, Matrix::identity(n)) * dl, Matrix::identity(n));
  }
}

TEST(StrongConnection, ClosedFormOnRegular) {
  for (const auto& name : {"Z/2", "Z/3", "Z/4", "Z/2xZ/2", "S3"}) {
    const ComoduleAlgebra reg = regular(name);
    const StrongConnection ell{oracle::regular_connection(FiniteGroup::named(name)), true};
    EXPECT_TRUE(check_strong_connection(reg, ell).ok()) << name;
    std::vector<Scalar> x;
    const std::size_t nh = reg.dim_h();
    for (std::size_t k = 0; k < ell.ell.rows(); ++k)
      for (std::size_t h = 0; h < nh; ++h) x.push_back(ell.ell(k, h));
    EXPECT_TRUE(strong_connection_system(reg, true).satisfied_by(x)) << name;
    EXPECT_TRUE(solve_strong_connection(reg).feasible) << name;
  }
}

TEST(StrongConnection, SolverOutputPassesRecheck) {
  const ComoduleAlgebra reg = regular("Z/2");
  const ConnectionSolve s = solve_strong_connection(reg, false);
  ASSERT_TRUE(s.feasible);
  const Report r = check_strong_connection(reg, *s.connection);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.status("multiplication_counit"), true);
  EXPECT_EQ(s.unknowns, 8u);
}

TEST(StrongConnection, InfeasibleOnTrivialPoint) {
  const ComoduleAlgebra pt = point_under_z2();
  const ConnectionSolve s = solve_strong_connection(pt, false);
  EXPECT_FALSE(s.feasible);
  EXPECT_EQ(s.unknowns, 2u);
  ASSERT_TRUE(s.infeasibility);
  EXPECT_TRUE(certifies_infeasibility(strong_connection_system(pt, false), s.infeasibility->multipliers));
  EXPECT_FALSE(is_principal(pt).principal);
}

TEST(StrongConnection, TrivialHopf) {
  const ComoduleAlgebra t = trivial_coaction(matrix_algebra(2), trivial_hopf());
  const ConnectionSolve s = solve_strong_connection(t, true);
  ASSERT_TRUE(s.feasible);
  EXPECT_TRUE(check_strong_connection(t, *s.connection).ok());
  EXPECT_TRUE(is_principal(t).principal);
  const TranslationInverse inv = translation_inverse(t, *s.connection);
  EXPECT_TRUE(inv.verdict());
}

TEST(StrongConnection, ZeroFailsSplitting) {
  const ComoduleAlgebra reg = regular("Z/2");
  const Report r = check_strong_connection(reg, StrongConnection{Matrix(4, 2), false});
  EXPECT_EQ(r.status("splitting"), false);
}

TEST(TranslationInverse, RegularZ2) {
  const ComoduleAlgebra reg = regular("Z/2");
  const StrongConnection ell{oracle::regular_connection(FiniteGroup::cyclic(2)), true};
  const BalancedTensor bt = balanced_tensor(reg, coinvariants(reg));
  const CanonicalMap can = canonical_map(reg, bt);
  const TranslationInverse inv = translation_inverse(reg, ell, bt, can);
  EXPECT_TRUE(inv.can_after_translation);
  EXPECT_TRUE(inv.translation_after_can);
  EXPECT_EQ(can.matrix * inv.map, Matrix::identity(4));
  EXPECT_EQ(inv.map * can.matrix, Matrix::identity(4));
}

TEST(Principal, Examples) {
  for (const auto& g : {"Z/2", "Z/3", "Z/4"}) EXPECT_TRUE(is_principal(regular(g)).principal) << g;
  EXPECT_FALSE(is_principal(point_under_z2()).principal);
  EXPECT_TRUE(is_principal(trivial_coaction(function_algebra({"a"}), trivial_hopf())).principal);
}

// Every feasible corpus connection: m∘ℓ = ε and both translation composites.
TEST(Principal, CorpusProperties) {
  for (const auto& g : {"Z/2", "Z/3"}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& x : enumerate_actions(FiniteGroup::named(g), n)) {
        const ComoduleAlgebra pa = fun_comodule(x);
        const ConnectionSolve s = solve_strong_connection(pa, false);
        EXPECT_EQ(s.feasible, is_free(x));
        if (!s.feasible) continue;
        EXPECT_TRUE(check_strong_connection(pa, *s.connection).ok());
        EXPECT_TRUE(translation_inverse(pa, *s.connection).verdict());
        EXPECT_TRUE(solve_strong_connection(pa, true).feasible);
      }
    }
  }
}
