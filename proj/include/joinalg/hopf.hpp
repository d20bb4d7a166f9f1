#ifndef JOINALG_HOPF_HPP
#define JOINALG_HOPF_HPP

#include <optional>

#include "joinalg/algebra.hpp"
#include "joinalg/group.hpp"

namespace joinalg {

/// Finite-dimensional Hopf algebra with every structure map stored as a
/// matrix in the algebra's basis:
///   coproduct        dim² x dim   (target basis ordered left leg major)
///   counit           1 x dim
///   antipode         dim x dim
///   antipode_inverse dim x dim, or 0 x 0 when the antipode is singular
struct HopfAlgebra {
  Algebra algebra;
  Matrix coproduct;
  Matrix counit;
  Matrix antipode;
  Matrix antipode_inverse;

  std::size_t dim() const { return algebra.dim(); }
  bool has_bijective_antipode() const { return antipode_inverse.rows() == dim() && dim() > 0; }
};

/// Assembles a Hopf algebra. A missing inverse is computed from the
/// antipode; a supplied one is stored as given and checked by check_hopf.
HopfAlgebra make_hopf(Algebra algebra, Matrix coproduct, Matrix counit, Matrix antipode,
                      std::optional<Matrix> antipode_inverse = std::nullopt);

/// Verifies the algebra axioms, coassociativity, both counit laws, that Δ
/// and ε are unital algebra maps, both antipode laws and bijectivity of S.
Report check_hopf(const HopfAlgebra& h);

/// Fun(G): δ_g δ_h = [g=h] δ_g, Δ(δ_g) = Σ_{ab=g} δ_a⊗δ_b, ε(δ_g) = [g=e], S(δ_g) = δ_{g⁻¹}.
HopfAlgebra function_hopf(const FiniteGroup& g);
/// k[G]: u_g u_h = u_{gh}, Δ(u_g) = u_g⊗u_g, ε(u_g) = 1, S(u_g) = u_{g⁻¹}.
HopfAlgebra group_hopf(const FiniteGroup& g);
/// The one-dimensional Hopf algebra k.
HopfAlgebra trivial_hopf();

/// Iterated coproduct h ↦ h_(1)⊗…⊗h_(n), built left-nested:
/// legs(n + 1) = (legs(n) ⊗ id) ∘ Δ. Throws std::invalid_argument for n < 2.
Matrix sweedler_legs(const HopfAlgebra& h, std::size_t n);

/// Column vector of the unit, i.e. the map k -> H.
Matrix unit_map(const Algebra& a);

}  // namespace joinalg

#endif  // JOINALG_HOPF_HPP
