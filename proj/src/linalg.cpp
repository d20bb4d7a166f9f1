#include "joinalg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace joinalg {

Space::Space(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("Space: basis labels must be unique");
  }
}

Space Space::numbered(const std::string& prefix, std::size_t dim) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i));
  return Space(std::move(labels));
}

Space Space::tensor(const Space& left, const Space& right) {
  std::vector<std::string> labels;
  labels.reserve(left.dim() * right.dim());
  for (const auto& a : left.labels()) {
    for (const auto& b : right.labels()) labels.push_back(a + "⊗" + b);
  }
  return Space(std::move(labels));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

SparseVector Matrix::sparse_row(std::size_t r) const {
  SparseVector out;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!joinalg::is_zero((*this)(r, c))) out.emplace_back(c, (*this)(r, c));
  }
  return out;
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> values) {
  if (values.size() != rows_) throw std::invalid_argument("Matrix::set_column: size mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

Vector Matrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  Vector y(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (joinalg::is_zero(x[c])) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!joinalg::is_zero(a)) y[r] += a * x[c];
    }
  }
  return y;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return joinalg::is_zero(s); });
}

std::size_t Matrix::nonzeros() const {
  return static_cast<std::size_t>(std::count_if(
      data_.begin(), data_.end(), [](const Scalar& s) { return !joinalg::is_zero(s); }));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (!is_zero(bkj)) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix sum: dimension mismatch");
  }
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Scalar(-1) * b; }

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) *= s;
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (is_zero(aij)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& bkl = b(k, l);
          if (!is_zero(bkl)) out(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
      }
    }
  }
  return out;
}

Vector kron(std::span<const Scalar> a, std::span<const Scalar> b) {
  Vector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!is_zero(b[j])) out[i * b.size() + j] = a[i] * b[j];
    }
  }
  return out;
}

Vector apply_left_factor(const Matrix& f, std::size_t right_dim, std::span<const Scalar> t) {
  if (t.size() != f.cols() * right_dim) throw std::invalid_argument("apply_left_factor: dimension mismatch");
  Vector out(f.rows() * right_dim);
  for (std::size_t a = 0; a < f.cols(); ++a) {
    for (std::size_t b = 0; b < right_dim; ++b) {
      const Scalar& x = t[a * right_dim + b];
      if (is_zero(x)) continue;
      for (std::size_t r = 0; r < f.rows(); ++r) {
        if (!is_zero(f(r, a))) out[r * right_dim + b] += f(r, a) * x;
      }
    }
  }
  return out;
}

Vector apply_right_factor(std::size_t left_dim, const Matrix& f, std::span<const Scalar> t) {
  if (t.size() != left_dim * f.cols()) throw std::invalid_argument("apply_right_factor: dimension mismatch");
  Vector out(left_dim * f.rows());
  for (std::size_t a = 0; a < left_dim; ++a) {
    for (std::size_t b = 0; b < f.cols(); ++b) {
      const Scalar& x = t[a * f.cols() + b];
      if (is_zero(x)) continue;
      for (std::size_t r = 0; r < f.rows(); ++r) {
        if (!is_zero(f(r, b))) out[a * f.rows() + r] += f(r, b) * x;
      }
    }
  }
  return out;
}

Matrix flip_matrix(std::size_t left_dim, std::size_t right_dim) {
  Matrix m(left_dim * right_dim, left_dim * right_dim);
  for (std::size_t a = 0; a < left_dim; ++a) {
    for (std::size_t b = 0; b < right_dim; ++b) m(b * left_dim + a, a * right_dim + b) = 1;
  }
  return m;
}

namespace {

std::vector<SparseVector> sparse_rows(const Matrix& m) {
  std::vector<SparseVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.sparse_row(r));
  return rows;
}

}  // namespace

std::size_t rank(const Matrix& m) { return reduced_echelon(sparse_rows(m), m.cols()).rank(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  std::vector<SparseVector> rows = sparse_rows(m);
  for (std::size_t r = 0; r < n; ++r) rows[r].emplace_back(n + r, Scalar(1));
  EchelonForm form = reduced_echelon(std::move(rows), 2 * n);
  if (form.rank() < n || form.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& [c, v] : form.rows[r]) {
      if (c >= n) inv(r, c - n) = v;
    }
  }
  return inv;
}

Vector unit_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = 1;
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sum: dimension mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector difference: dimension mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return is_zero(s); });
}

LinearMap::LinearMap(Space src, Space tgt, Matrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) {
    throw std::invalid_argument("LinearMap: matrix shape does not match spaces");
  }
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (f.target.dim() != g.source.dim()) throw std::invalid_argument("compose: dimension mismatch");
  return LinearMap(f.source, g.target, g.matrix * f.matrix);
}

LinearMap kron(const LinearMap& f, const LinearMap& g) {
  return LinearMap(Space::tensor(f.source, g.source), Space::tensor(f.target, g.target),
                   kron(f.matrix, g.matrix));
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  std::vector<SparseVector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw std::invalid_argument("Subspace::span: dimension mismatch");
    rows.push_back(to_sparse(v));
  }
  return span_sparse(ambient_dim, std::move(rows));
}

Subspace Subspace::span_sparse(std::size_t ambient_dim, std::vector<SparseVector> vectors) {
  EchelonForm form = reduced_echelon(std::move(vectors), ambient_dim);
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = std::move(form.rows);
  s.pivots_ = std::move(form.pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back({{i, Scalar(1)}});
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  return s;
}

Vector Subspace::basis_vector(std::size_t i) const { return to_dense(basis_.at(i), ambient_); }

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  out.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) out.push_back(basis_vector(i));
  return out;
}

Matrix Subspace::inclusion() const {
  Matrix m(ambient_, basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (const auto& [r, v] : basis_[i]) m(r, i) = v;
  }
  return m;
}

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::coordinates: dimension mismatch");
  Vector coords(basis_.size());
  Vector residual(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    coords[i] = v[pivots_[i]];
    if (is_zero(coords[i])) continue;
    for (const auto& [c, val] : basis_[i]) residual[c] -= coords[i] * val;
  }
  if (!is_zero_vector(residual)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

Matrix Subspace::constraints() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> free_columns;
  std::vector<std::ptrdiff_t> row_of(ambient_, -1);
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (!is_pivot[c]) {
      row_of[c] = static_cast<std::ptrdiff_t>(free_columns.size());
      free_columns.push_back(c);
    }
  }
  Matrix m(free_columns.size(), ambient_);
  for (std::size_t r = 0; r < free_columns.size(); ++r) m(r, free_columns[r]) = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (const auto& [c, v] : basis_[i]) {
      if (row_of[c] >= 0) m(static_cast<std::size_t>(row_of[c]), pivots_[i]) -= v;
    }
  }
  return m;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && pivots_ == other.pivots_ && basis_ == other.basis_;
}

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  EchelonForm form = reduced_echelon(sparse_rows(m), n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : form.pivots) is_pivot[p] = true;
  std::vector<SparseVector> generators(n);
  for (std::size_t i = 0; i < form.rows.size(); ++i) {
    for (const auto& [c, v] : form.rows[i]) {
      if (!is_pivot[c]) generators[c].emplace_back(form.pivots[i], -v);
    }
  }
  std::vector<SparseVector> vectors;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    SparseVector g = std::move(generators[c]);
    g.emplace_back(c, Scalar(1));
    std::sort(g.begin(), g.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    vectors.push_back(std::move(g));
  }
  return Subspace::span_sparse(n, std::move(vectors));
}

Subspace image(const Matrix& m) {
  Matrix t = m.transpose();
  return Subspace::span_sparse(m.rows(), sparse_rows(t));
}

Subspace intersection(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) {
    throw std::invalid_argument("intersection: ambient mismatch");
  }
  Matrix cu = u.constraints();
  Matrix cv = v.constraints();
  std::vector<SparseVector> rows;
  for (std::size_t r = 0; r < cu.rows(); ++r) rows.push_back(cu.sparse_row(r));
  for (std::size_t r = 0; r < cv.rows(); ++r) rows.push_back(cv.sparse_row(r));
  Matrix stacked(rows.size(), u.ambient_dim());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, val] : rows[r]) stacked(r, c) = val;
  }
  return kernel(stacked);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  std::vector<SparseVector> rows = u.sparse_basis();
  rows.insert(rows.end(), v.sparse_basis().begin(), v.sparse_basis().end());
  return Subspace::span_sparse(u.ambient_dim(), std::move(rows));
}

Subspace preimage(const Matrix& f, const Subspace& w) {
  if (f.rows() != w.ambient_dim()) throw std::invalid_argument("preimage: ambient mismatch");
  return kernel(w.constraints() * f);
}

Subspace tensor(const Subspace& u, const Subspace& v) {
  const std::size_t right = v.ambient_dim();
  std::vector<SparseVector> rows;
  rows.reserve(u.dim() * v.dim());
  for (const auto& a : u.sparse_basis()) {
    for (const auto& b : v.sparse_basis()) {
      SparseVector t;
      t.reserve(a.size() * b.size());
      for (const auto& [i, x] : a) {
        for (const auto& [j, y] : b) t.emplace_back(i * right + j, x * y);
      }
      rows.push_back(std::move(t));
    }
  }
  return Subspace::span_sparse(u.ambient_dim() * right, std::move(rows));
}

std::optional<Vector> tensor_coordinates(const Subspace& u, const Subspace& v,
                                         std::span<const Scalar> t) {
  const std::size_t left = u.ambient_dim();
  const std::size_t right = v.ambient_dim();
  if (t.size() != left * right) {
    throw std::invalid_argument("tensor_coordinates: dimension mismatch");
  }
  // Columns of the left x right reshape must lie in u.
  Matrix partial(u.dim(), right);
  Vector column(left);
  for (std::size_t b = 0; b < right; ++b) {
    for (std::size_t a = 0; a < left; ++a) column[a] = t[a * right + b];
    if (is_zero_vector(column)) continue;
    auto coords = u.coordinates(column);
    if (!coords) return std::nullopt;
    partial.set_column(b, *coords);
  }
  Vector out(u.dim() * v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Vector row = partial.row(i);
    if (is_zero_vector(row)) continue;
    auto coords = v.coordinates(row);
    if (!coords) return std::nullopt;
    for (std::size_t j = 0; j < v.dim(); ++j) out[i * v.dim() + j] = (*coords)[j];
  }
  return out;
}

bool left_leg_in(const Subspace& left, std::size_t right_dim, std::span<const Scalar> t) {
  const std::size_t left_dim = left.ambient_dim();
  if (t.size() != left_dim * right_dim) throw std::invalid_argument("left_leg_in: dimension mismatch");
  Vector column(left_dim);
  for (std::size_t b = 0; b < right_dim; ++b) {
    for (std::size_t a = 0; a < left_dim; ++a) column[a] = t[a * right_dim + b];
    if (!is_zero_vector(column) && !left.contains(column)) return false;
  }
  return true;
}

bool right_leg_in(std::size_t left_dim, const Subspace& right, std::span<const Scalar> t) {
  const std::size_t right_dim = right.ambient_dim();
  if (t.size() != left_dim * right_dim) throw std::invalid_argument("right_leg_in: dimension mismatch");
  for (std::size_t a = 0; a < left_dim; ++a) {
    auto row = t.subspan(a * right_dim, right_dim);
    if (!is_zero_vector(row) && !right.contains(row)) return false;
  }
  return true;
}

QuotientSpace quotient(const Subspace& killed) {
  const std::size_t n = killed.ambient_dim();
  QuotientSpace q;
  q.killed = killed;
  std::vector<bool> is_pivot(n, false);
  for (auto p : killed.pivots()) is_pivot[p] = true;
  std::vector<std::ptrdiff_t> slot(n, -1);
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) {
      slot[c] = static_cast<std::ptrdiff_t>(q.complement.size());
      q.complement.push_back(c);
    }
  }
  q.projection = Matrix(q.complement.size(), n);
  q.section = Matrix(n, q.complement.size());
  for (std::size_t r = 0; r < q.complement.size(); ++r) {
    q.projection(r, q.complement[r]) = 1;
    q.section(q.complement[r], r) = 1;
  }
  const auto& basis = killed.sparse_basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (const auto& [c, v] : basis[i]) {
      if (slot[c] >= 0) q.projection(static_cast<std::size_t>(slot[c]), killed.pivots()[i]) -= v;
    }
  }
  return q;
}

std::optional<AffineSolution> solve(const Matrix& f, std::span<const Scalar> y) {
  if (y.size() != f.rows()) throw std::invalid_argument("solve: dimension mismatch");
  LinearSystem system(f.cols());
  for (std::size_t r = 0; r < f.rows(); ++r) system.add_equation(f.sparse_row(r), y[r]);
  SystemSolution s = solve_system(system);
  if (!s.feasible) return std::nullopt;
  return AffineSolution{std::move(s.solution), kernel(f)};
}

}  // namespace joinalg
