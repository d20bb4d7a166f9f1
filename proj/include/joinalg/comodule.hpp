#ifndef JOINALG_COMODULE_HPP
#define JOINALG_COMODULE_HPP

#include <optional>

#include "joinalg/algebra.hpp"
#include "joinalg/hopf.hpp"
#include "joinalg/sparse.hpp"

namespace joinalg {

/// Right H-comodule algebra P with coaction δ: P -> P⊗H, stored as a
/// (dim P · dim H) x dim P matrix.
struct ComoduleAlgebra {
  Algebra algebra;
  HopfAlgebra hopf;
  Matrix coaction;

  std::size_t dim_p() const { return algebra.dim(); }
  std::size_t dim_h() const { return hopf.dim(); }
};

/// δ multiplicative and unital, (δ⊗id)∘δ = (id⊗Δ)∘δ and (id⊗ε)∘δ = id.
Report check_comodule(const ComoduleAlgebra& pa);

/// P^coH = ker(δ - (· ⊗ 1)); throws ConstructionError if the kernel is not a
/// unital subalgebra.
Subalgebra coinvariants(const ComoduleAlgebra& pa);

/// P ⊗_B P as the quotient of P⊗P by span{pb⊗q - p⊗bq}.
struct BalancedTensor {
  QuotientSpace quotient;

  const Matrix& projection() const { return quotient.projection; }
  std::size_t dim() const { return quotient.dim(); }
};

BalancedTensor balanced_tensor(const ComoduleAlgebra& pa, const Subalgebra& coinvariant);

/// p⊗q ↦ (p⊗1)δ(q) as a (dim P · dim H) x dim P² matrix.
Matrix lifted_canonical(const ComoduleAlgebra& pa);

struct CanonicalMap {
  Matrix matrix;  // (dim P · dim H) x dim(P ⊗_B P)
  /// The lifted map kills every balancing relation.
  bool well_defined = false;
  std::size_t rank = 0;
  bool bijective = false;
};

CanonicalMap canonical_map(const ComoduleAlgebra& pa, const BalancedTensor& balanced);

/// δ^L = (S⁻¹⊗id)∘flip∘δ : P -> H⊗P. Requires a bijective antipode.
Matrix delta_left(const ComoduleAlgebra& pa);

/// ℓ: H -> P⊗P as a dim P² x dim H matrix.
struct StrongConnection {
  Matrix ell;
  bool unital = false;
};

struct InfeasibilityCertificate {
  /// Equation of the constraint system that eliminated to 0 = c, c != 0.
  std::size_t inconsistent_equation = 0;
  /// y with yᵀA = 0, yᵀb = 1.
  Vector multipliers;
};

struct ConnectionSolve {
  bool feasible = false;
  std::optional<StrongConnection> connection;
  std::optional<InfeasibilityCertificate> infeasibility;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
};

/// The bicolinearity and splitting constraints (and ℓ(1) = 1⊗1 when
/// requested) as one linear system. Unknown (k, h) of ℓ has index
/// k * dim H + h, k indexing P⊗P.
LinearSystem strong_connection_system(const ComoduleAlgebra& pa, bool require_unital);

ConnectionSolve solve_strong_connection(const ComoduleAlgebra& pa, bool require_unital = false);

/// Right and left colinearity, splitting, m∘ℓ = ε, and ℓ(1) = 1⊗1 when the
/// connection claims to be unital.
Report check_strong_connection(const ComoduleAlgebra& pa, const StrongConnection& connection);

struct TranslationInverse {
  Matrix map;  // dim(P ⊗_B P) x (dim P · dim H)
  bool can_after_translation = false;
  bool translation_after_can = false;

  bool verdict() const { return can_after_translation && translation_after_can; }
};

/// L(p⊗h) = π_B(p ℓ(h)⟨1⟩ ⊗ ℓ(h)⟨2⟩), with both composites against the
/// canonical map compared to identities.
TranslationInverse translation_inverse(const ComoduleAlgebra& pa, const StrongConnection& connection);
TranslationInverse translation_inverse(const ComoduleAlgebra& pa, const StrongConnection& connection,
                                       const BalancedTensor& balanced, const CanonicalMap& can);

struct Principality {
  bool principal = false;
  ConnectionSolve solve;
};

/// Existence of a (not necessarily unital) strong connection.
Principality is_principal(const ComoduleAlgebra& pa);

}  // namespace joinalg

#endif  // JOINALG_COMODULE_HPP
