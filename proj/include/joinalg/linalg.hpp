#ifndef JOINALG_LINALG_HPP
#define JOINALG_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "joinalg/rational.hpp"
#include "joinalg/sparse.hpp"

namespace joinalg {

using Vector = std::vector<Scalar>;

/// Vector space with a labeled basis.
class Space {
 public:
  Space() = default;
  explicit Space(std::vector<std::string> labels);

  /// Basis labelled prefix0, prefix1, ...
  static Space numbered(const std::string& prefix, std::size_t dim);
  /// Labels "a⊗b", left factor major.
  static Space tensor(const Space& left, const Space& right);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  bool operator==(const Space&) const = default;

 private:
  std::vector<std::string> labels_;
};

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  SparseVector sparse_row(std::size_t r) const;
  void set_column(std::size_t c, std::span<const Scalar> values);

  Vector apply(std::span<const Scalar> x) const;
  Matrix transpose() const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& a);

/// Kronecker product; row (i, k) = i * b.rows() + k, column (j, l) = j * b.cols() + l.
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(std::span<const Scalar> a, std::span<const Scalar> b);

/// (f ⊗ id_right) t and (id_left ⊗ f) t without forming the Kronecker product.
Vector apply_left_factor(const Matrix& f, std::size_t right_dim, std::span<const Scalar> t);
Vector apply_right_factor(std::size_t left_dim, const Matrix& f, std::span<const Scalar> t);

/// Matrix of the flip V⊗W -> W⊗V.
Matrix flip_matrix(std::size_t left_dim, std::size_t right_dim);

std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

Vector unit_vector(std::size_t dim, std::size_t i);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
bool is_zero_vector(std::span<const Scalar> v);

/// A linear map between labeled spaces.
struct LinearMap {
  Space source;
  Space target;
  Matrix matrix;

  LinearMap() = default;
  LinearMap(Space src, Space tgt, Matrix m);

  Vector operator()(std::span<const Scalar> x) const { return matrix.apply(x); }
  bool operator==(const LinearMap&) const = default;
};

/// g ∘ f
LinearMap compose(const LinearMap& g, const LinearMap& f);
LinearMap kron(const LinearMap& f, const LinearMap& g);

/// Subspace of k^n held as a reduced row echelon basis with monic pivots,
/// so equal subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace span_sparse(std::size_t ambient_dim, std::vector<SparseVector> vectors);
  static Subspace full(std::size_t ambient_dim);
  static Subspace zero(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVector>& sparse_basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const;
  std::vector<Vector> basis() const;

  /// Columns are the basis vectors (ambient_dim x dim).
  Matrix inclusion() const;

  /// Coordinates of v in this basis, or nullopt if v is not in the subspace.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }
  bool contains(const Subspace& other) const;

  /// Rows whose common kernel is exactly this subspace.
  Matrix constraints() const;

  bool operator==(const Subspace&) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<SparseVector> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);
Subspace intersection(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
/// {x | f x ∈ w}
Subspace preimage(const Matrix& f, const Subspace& w);
/// span{u ⊗ v}
Subspace tensor(const Subspace& u, const Subspace& v);

/// Coordinates of a tensor t ∈ k^{u.ambient} ⊗ k^{v.ambient} in the basis
/// {u_i ⊗ v_j}, or nullopt when t is not in u ⊗ v.
std::optional<Vector> tensor_coordinates(const Subspace& u, const Subspace& v,
                                         std::span<const Scalar> t);

/// Every column of the reshaped tensor (left leg varies along rows) lies in `left`.
bool left_leg_in(const Subspace& left, std::size_t right_dim, std::span<const Scalar> t);
bool right_leg_in(std::size_t left_dim, const Subspace& right, std::span<const Scalar> t);

/// Ambient space modulo `killed`. The complement is spanned by the
/// non-pivot coordinates of the killed basis.
struct QuotientSpace {
  Subspace killed;
  Matrix projection;  // quotient_dim x ambient_dim
  Matrix section;     // ambient_dim x quotient_dim
  std::vector<std::size_t> complement;

  std::size_t dim() const { return complement.size(); }
};

QuotientSpace quotient(const Subspace& killed);

/// One solution of f x = y plus the homogeneous solution space.
struct AffineSolution {
  Vector particular;
  Subspace homogeneous;
};

/// Throws std::invalid_argument on dimension mismatch.
std::optional<AffineSolution> solve(const Matrix& f, std::span<const Scalar> y);

}  // namespace joinalg

#endif  // JOINALG_LINALG_HPP
