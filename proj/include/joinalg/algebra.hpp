#ifndef JOINALG_ALGEBRA_HPP
#define JOINALG_ALGEBRA_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "joinalg/linalg.hpp"
#include "joinalg/report.hpp"

namespace joinalg {

/// e_left · e_right contributes value · e_out.
struct StructureConstant {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t out = 0;
  Scalar value;
};

/// Finite-dimensional unital associative algebra given by structure
/// constants. The axioms are not enforced on construction; run
/// check_algebra before trusting an algebra loaded from outside.
class Algebra {
 public:
  Algebra() = default;
  Algebra(Space space, const std::vector<StructureConstant>& constants, Vector unit);
  /// products[i * dim + j] = e_i · e_j
  Algebra(Space space, std::vector<SparseVector> products, Vector unit);

  /// The ground field k, spanned by "1".
  static Algebra ground_field();

  const Space& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const Vector& unit() const { return unit_; }

  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  std::vector<StructureConstant> constants() const;

  Vector multiply(std::span<const Scalar> a, std::span<const Scalar> b) const;
  /// The multiplication map A⊗A -> A (dim x dim²).
  Matrix multiplication_map() const;
  bool is_commutative() const;

 private:
  Space space_;
  std::vector<SparseVector> products_;
  Vector unit_;
};

Report check_algebra(const Algebra& a);

/// Fun(labels): pointwise multiplication on the indicator basis δ_x.
Algebra function_algebra(const std::vector<std::string>& points);
/// Full matrix algebra M_n with basis E_ij.
Algebra matrix_algebra(std::size_t n);
/// (a⊗b)(a'⊗b') = aa'⊗bb', unit 1⊗1, basis ordered left factor major.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);
/// A ⊕ B with componentwise product; basis of A first.
Algebra direct_sum(const Algebra& a, const Algebra& b);

/// A subspace with the structure constants it inherits from the ambient
/// algebra, expressed in the subspace's echelon basis.
struct Subalgebra {
  Subspace subspace;
  Algebra algebra;
  bool unital = false;

  Matrix inclusion() const { return subspace.inclusion(); }
};

class NotClosed : public std::runtime_error {
 public:
  NotClosed(std::size_t left, std::size_t right, const std::string& message)
      : std::runtime_error(message), left(left), right(right) {}
  /// Indices of the two subspace basis vectors whose product leaves it.
  std::size_t left;
  std::size_t right;
};

/// Throws NotClosed with a witness pair when `u` is not multiplicatively closed.
Subalgebra subalgebra_from_subspace(const Algebra& a, const Subspace& u);

struct AlgebraHom {
  Algebra source;
  Algebra target;
  Matrix map;  // target.dim x source.dim
};

struct HomReport {
  Report report;
  bool surjective = false;
};

HomReport check_hom(const AlgebraHom& f);
/// g ∘ f
AlgebraHom compose(const AlgebraHom& g, const AlgebraHom& f);

}  // namespace joinalg

#endif  // JOINALG_ALGEBRA_HPP
