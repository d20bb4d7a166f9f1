#ifndef JOINALG_SPARSE_HPP
#define JOINALG_SPARSE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "joinalg/rational.hpp"

namespace joinalg {

/// Sparse vector as (index, value) pairs: strictly increasing indices and
/// no stored zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector to_sparse(const std::vector<Scalar>& dense);
std::vector<Scalar> to_dense(const SparseVector& sparse, std::size_t size);

/// target += factor * source, dropping entries that cancel.
void add_scaled(SparseVector& target, const Scalar& factor, const SparseVector& source);

/// Reduced row echelon form of a set of sparse rows over `columns` columns.
/// Rows are ordered by pivot, pivots are monic, and every pivot column is
/// zero in every other row. `origins[i]` is the index of the input row that
/// was selected as pivot row i.
struct EchelonForm {
  std::vector<SparseVector> rows;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> origins;

  std::size_t rank() const { return rows.size(); }
};

/// Column-ordered Gauss-Jordan elimination. Among the candidate rows for a
/// column the sparsest is chosen (ties go to the lowest row index), so the
/// result depends only on the input rows.
EchelonForm reduced_echelon(std::vector<SparseVector> rows, std::size_t columns);

/// Inhomogeneous system A x = b with sparse rows.
class LinearSystem {
 public:
  explicit LinearSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  void add_equation(SparseVector coefficients, Scalar rhs);

  std::size_t unknowns() const { return unknowns_; }
  std::size_t equations() const { return rows_.size(); }
  const SparseVector& coefficients(std::size_t i) const { return rows_[i]; }
  const Scalar& rhs(std::size_t i) const { return rhs_[i]; }

  /// Residual A x - b.
  std::vector<Scalar> residual(const std::vector<Scalar>& x) const;
  bool satisfied_by(const std::vector<Scalar>& x) const;

 private:
  std::size_t unknowns_;
  std::vector<SparseVector> rows_;
  std::vector<Scalar> rhs_;
};

struct SystemSolution {
  bool feasible = false;
  /// Particular solution with every free unknown set to zero.
  std::vector<Scalar> solution;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  /// Input equation that reduced to 0 = c with c != 0.
  std::optional<std::size_t> inconsistent_equation;
};

SystemSolution solve_system(const LinearSystem& system);

/// Multipliers y with y^T A = 0 and y^T b = 1, found by solving the
/// transposed system. They exist exactly when A x = b has no solution.
std::optional<std::vector<Scalar>> infeasibility_multipliers(const LinearSystem& system);

/// Checks y^T A = 0 and y^T b != 0 directly.
bool certifies_infeasibility(const LinearSystem& system, const std::vector<Scalar>& multipliers);

}  // namespace joinalg

#endif  // JOINALG_SPARSE_HPP
