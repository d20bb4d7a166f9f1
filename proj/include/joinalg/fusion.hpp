#ifndef JOINALG_FUSION_HPP
#define JOINALG_FUSION_HPP

#include <cstddef>
#include <vector>

#include "joinalg/comodule.hpp"

namespace joinalg {

/// Unital algebra C with two surjections π1: C -> C1 and π2: C -> C2 whose
/// direct sum C -> C1 ⊕ C2 is onto. J_i = ker π_i.
struct BaseWithEnds {
  Algebra base;
  AlgebraHom end1;
  AlgebraHom end2;
};

/// Both ends are algebra maps, each is onto, and π1 ⊕ π2 is onto.
Report check_base(const BaseWithEnds& base);

/// Fun({0, 1/m, ..., 1}) with π1 = evaluation at 1 and π2 = evaluation at 0.
struct ChainInterval {
  std::size_t resolution = 1;
  BaseWithEnds ends;

  static ChainInterval make(std::size_t m);
  std::size_t points() const { return resolution + 1; }
};

/// Elements s, s' of C standing in for √t and √(1-t).
struct SqrtPair {
  Vector root;
  Vector complement;
};

/// s² + s'² = 1, π2(s) = 0, π1(s') = 0, ss' = s's.
Report check_sqrt_pair(const BaseWithEnds& base, const SqrtPair& pair);

/// s takes the profile values pointwise, s' = sqrt(1 - s²) pointwise.
/// Throws MalformedInput if an endpoint value is wrong or 1 - s(k)² is not
/// the square of a rational.
SqrtPair make_sqrt_pair(const ChainInterval& chain, const std::vector<Scalar>& profile);

/// {x ∈ C⊗A1⊗A2 | (π1⊗id)(x) ∈ C1⊗A1⊗1, (π2⊗id)(x) ∈ C2⊗1⊗A2}
struct FusionAlgebra {
  BaseWithEnds base;
  Algebra left;
  Algebra right;
  Algebra ambient;
  Subalgebra carrier;
};

FusionAlgebra build_fusion(const BaseWithEnds& base, const Algebra& left, const Algebra& right);

/// {x ∈ C⊗P⊗H | (π1⊗id)(x) ∈ C1⊗δ(P), (π2⊗id)(x) ∈ C2⊗1⊗H} with the
/// coaction id⊗id⊗Δ restricted to it.
struct EquivariantFusion {
  BaseWithEnds base;
  ComoduleAlgebra source;
  Algebra ambient;
  Matrix ambient_coaction;
  Subalgebra carrier;
  /// The carrier as a comodule algebra in its own echelon basis.
  ComoduleAlgebra comodule;
  /// Closure, the endpoint images of the coaction, corestriction into
  /// carrier⊗H and the comodule-algebra axioms.
  Report report;
};

EquivariantFusion build_equivariant_fusion(const BaseWithEnds& base, const ComoduleAlgebra& pa);

/// Coinvariants of the restricted coaction, in carrier coordinates.
Subalgebra coinvariants_of_fusion(const EquivariantFusion& ef);

/// Restriction of an ambient coaction to a subspace, corestricted to
/// subspace⊗H; nullopt if some image leaves subspace⊗H.
std::optional<Matrix> restrict_coaction(const Matrix& ambient_coaction, const Subspace& carrier,
                                        std::size_t dim_h);

struct LiftedConnection {
  /// ℓ̃ with values in (C⊗P⊗H)⊗(C⊗P⊗H).
  Matrix ambient;
  /// ℓ̃ corestricted to carrier⊗carrier (empty when it does not corestrict).
  StrongConnection connection;
  Report report;
};

/// ℓ̃(h) = s⊗ℓ(h₂)⟨1⟩⊗S(h₁) ⊗ s⊗ℓ(h₂)⟨2⟩⊗h₃ + s'⊗1⊗S(h₁) ⊗ s'⊗1⊗h₂,
/// checked leg by leg at both ends, corestricted to the carrier and run
/// through check_strong_connection on the fusion comodule algebra.
/// Throws PreconditionFailed if ℓ or the square-root pair is invalid.
LiftedConnection lift_connection(const EquivariantFusion& ef, const StrongConnection& ell, const SqrtPair& pair);

struct TheoremCertificate {
  StrongConnection source_connection;
  Report source_report;
  EquivariantFusion fusion;
  LiftedConnection lifted;
  Principality fusion_principality;
  Report fusion_solver_report;

  bool constructive_verdict() const { return lifted.report.ok(); }
  bool solver_verdict() const { return fusion_principality.principal && fusion_solver_report.ok(); }
  bool verified() const { return fusion.report.ok() && source_report.ok() && constructive_verdict() && solver_verdict(); }
};

/// Throws PreconditionFailed when pa fails its axioms or is not principal.
TheoremCertificate verify_theorem_main(const BaseWithEnds& base, const ComoduleAlgebra& pa, const SqrtPair& pair);
/// Same, with the source connection supplied instead of solved for.
TheoremCertificate verify_theorem_main(const BaseWithEnds& base, const ComoduleAlgebra& pa, const SqrtPair& pair,
                                       const StrongConnection& source_connection);

/// Halves of the join over a chain: P1 collapses to 1⊗H at 0, P2 lies in
/// δ(P) at 1; B1, B2 are the matching subalgebras of C⊗P.
struct PiecewiseParts {
  ChainInterval chain;
  Algebra ambient;
  Subalgebra p1;
  Subalgebra p2;
  Subalgebra b1;
  Subalgebra b2;
  ComoduleAlgebra p1_comodule;
  ComoduleAlgebra p2_comodule;
  Report report;
};

PiecewiseParts piecewise_parts(std::size_t m, const ComoduleAlgebra& pa);

struct PullbackVerdict {
  PiecewiseParts first;
  PiecewiseParts second;
  Subspace fiber_product;
  EquivariantFusion glued;
  /// Restriction map from the join over the concatenated chain into
  /// P1 ⊕ P2, in ambient coordinates.
  Matrix gluing;
  /// The same map in carrier -> fiber-product coordinates.
  Matrix isomorphism;
  Report report;
};

PullbackVerdict pullback_identification(std::size_t first_m, std::size_t second_m, const ComoduleAlgebra& pa);

}  // namespace joinalg

#endif  // JOINALG_FUSION_HPP
