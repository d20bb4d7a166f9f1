#include "joinalg/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace joinalg {

namespace {

void accumulate(Vector& acc, const Scalar& factor, const SparseVector& v) {
  for (const auto& [k, x] : v) acc[k] += factor * x;
}

std::string triple_label(const Space& s, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + s.label(i) + ", " + s.label(j) + ", " + s.label(k) + ")";
}

}  // namespace

Algebra::Algebra(Space space, const std::vector<StructureConstant>& constants, Vector unit)
    : space_(std::move(space)), unit_(std::move(unit)) {
  const std::size_t n = space_.dim();
  if (unit_.size() != n) throw std::invalid_argument("Algebra: unit has wrong dimension");
  std::vector<Vector> dense(n * n);
  for (const auto& c : constants) {
    if (c.left >= n || c.right >= n || c.out >= n) {
      throw std::out_of_range("Algebra: structure constant index out of range");
    }
    Vector& slot = dense[c.left * n + c.right];
    if (slot.empty()) slot.assign(n, Scalar(0));
    slot[c.out] += c.value;
  }
  products_.resize(n * n);
  for (std::size_t p = 0; p < n * n; ++p) {
    if (!dense[p].empty()) products_[p] = to_sparse(dense[p]);
  }
}

Algebra::Algebra(Space space, std::vector<SparseVector> products, Vector unit)
    : space_(std::move(space)), products_(std::move(products)), unit_(std::move(unit)) {
  const std::size_t n = space_.dim();
  if (unit_.size() != n) throw std::invalid_argument("Algebra: unit has wrong dimension");
  if (products_.size() != n * n) throw std::invalid_argument("Algebra: product table has wrong size");
}

Algebra Algebra::ground_field() {
  return Algebra(Space({"1"}), std::vector<StructureConstant>{{0, 0, 0, Scalar(1)}}, Vector{Scalar(1)});
}

Scalar Algebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [c, v] : product(i, j)) {
    if (c == k) return v;
  }
  return 0;
}

std::vector<StructureConstant> Algebra::constants() const {
  std::vector<StructureConstant> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, v] : product(i, j)) out.push_back({i, j, k, v});
    }
  }
  return out;
}

Vector Algebra::multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
  const std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw std::invalid_argument("Algebra::multiply: dimension mismatch");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(b[j])) continue;
      accumulate(out, a[i] * b[j], product(i, j));
    }
  }
  return out;
}

Matrix Algebra::multiplication_map() const {
  const std::size_t n = dim();
  Matrix m(n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& [k, v] : product(i, j)) m(k, i * n + j) = v;
    }
  }
  return m;
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      if (product(i, j) != product(j, i)) return false;
    }
  }
  return true;
}

Report check_algebra(const Algebra& a) {
  Report report;
  const std::size_t n = a.dim();
  const Space& s = a.space();

  std::string assoc_witness;
  Vector lhs(n), rhs(n);
  for (std::size_t i = 0; i < n && assoc_witness.empty(); ++i) {
    for (std::size_t j = 0; j < n && assoc_witness.empty(); ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(lhs.begin(), lhs.end(), Scalar(0));
        std::fill(rhs.begin(), rhs.end(), Scalar(0));
        for (const auto& [p, x] : a.product(i, j)) accumulate(lhs, x, a.product(p, k));
        for (const auto& [q, y] : a.product(j, k)) accumulate(rhs, y, a.product(i, q));
        if (lhs != rhs) {
          assoc_witness = "(e_i e_j) e_k != e_i (e_j e_k) at " + triple_label(s, i, j, k);
          break;
        }
      }
    }
  }
  report.add("associativity", assoc_witness.empty(), assoc_witness);

  std::string left_witness, right_witness;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e = unit_vector(n, i);
    if (left_witness.empty() && a.multiply(a.unit(), e) != e) left_witness = "1·e != e at " + s.label(i);
    if (right_witness.empty() && a.multiply(e, a.unit()) != e) right_witness = "e·1 != e at " + s.label(i);
  }
  report.add("left_unit", left_witness.empty(), left_witness);
  report.add("right_unit", right_witness.empty(), right_witness);
  return report;
}

Algebra function_algebra(const std::vector<std::string>& points) {
  std::vector<std::string> labels;
  std::vector<StructureConstant> constants;
  for (std::size_t i = 0; i < points.size(); ++i) {
    labels.push_back("δ_" + points[i]);
    constants.push_back({i, i, i, Scalar(1)});
  }
  return Algebra(Space(std::move(labels)), constants, Vector(points.size(), Scalar(1)));
}

Algebra matrix_algebra(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i) + std::to_string(j));
  }
  std::vector<StructureConstant> constants;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) constants.push_back({i * n + j, j * n + l, i * n + l, Scalar(1)});
    }
  }
  Vector unit(n * n);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
  return Algebra(Space(std::move(labels)), constants, std::move(unit));
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = na * nb;
  std::vector<SparseVector> products(n * n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      for (std::size_t k = 0; k < na; ++k) {
        const SparseVector& pa = a.product(i, k);
        if (pa.empty()) continue;
        for (std::size_t l = 0; l < nb; ++l) {
          const SparseVector& pb = b.product(j, l);
          if (pb.empty()) continue;
          SparseVector& out = products[(i * nb + j) * n + (k * nb + l)];
          out.reserve(pa.size() * pb.size());
          for (const auto& [p, x] : pa) {
            for (const auto& [q, y] : pb) out.emplace_back(p * nb + q, x * y);
          }
        }
      }
    }
  }
  return Algebra(Space::tensor(a.space(), b.space()), std::move(products), kron(a.unit(), b.unit()));
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  const std::size_t na = a.dim();
  const std::size_t n = na + b.dim();
  std::vector<std::string> labels;
  for (const auto& l : a.space().labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : b.space().labels()) labels.push_back("(0," + l + ")");
  std::vector<SparseVector> products(n * n);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) products[i * n + j] = a.product(i, j);
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      SparseVector shifted = b.product(i, j);
      for (auto& entry : shifted) entry.first += na;
      products[(na + i) * n + (na + j)] = std::move(shifted);
    }
  }
  Vector unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return Algebra(Space(std::move(labels)), std::move(products), std::move(unit));
}

Subalgebra subalgebra_from_subspace(const Algebra& a, const Subspace& u) {
  if (u.ambient_dim() != a.dim()) throw std::invalid_argument("subalgebra_from_subspace: ambient mismatch");
  const std::size_t d = u.dim();
  std::vector<Vector> basis = u.basis();
  std::vector<SparseVector> products(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vector p = a.multiply(basis[i], basis[j]);
      auto coords = u.coordinates(p);
      if (!coords) {
        throw NotClosed(i, j, "subspace not closed under multiplication: product of basis vectors " +
                                  std::to_string(i) + " and " + std::to_string(j) + " leaves it");
      }
      products[i * d + j] = to_sparse(*coords);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(d);
  for (std::size_t i = 0; i < d; ++i) labels.push_back("⟨" + a.space().label(u.pivots()[i]) + "⟩");

  Subalgebra out;
  auto unit = u.coordinates(a.unit());
  out.unital = unit.has_value();
  out.algebra = Algebra(Space(std::move(labels)), std::move(products), unit ? *unit : Vector(d));
  out.subspace = u;
  return out;
}

HomReport check_hom(const AlgebraHom& f) {
  HomReport out;
  const Algebra& src = f.source;
  const Algebra& tgt = f.target;
  if (f.map.rows() != tgt.dim() || f.map.cols() != src.dim()) {
    out.report.add("shape", false, "map matrix does not match source/target dimensions");
    return out;
  }
  std::vector<Vector> images;
  for (std::size_t i = 0; i < src.dim(); ++i) images.push_back(f.map.column(i));

  std::string witness;
  for (std::size_t i = 0; i < src.dim() && witness.empty(); ++i) {
    for (std::size_t j = 0; j < src.dim(); ++j) {
      Vector lhs = f.map.apply(to_dense(src.product(i, j), src.dim()));
      if (lhs != tgt.multiply(images[i], images[j])) {
        witness = "f(e_i e_j) != f(e_i) f(e_j) at (" + src.space().label(i) + ", " + src.space().label(j) + ")";
        break;
      }
    }
  }
  out.report.add("multiplicative", witness.empty(), witness);
  bool unital = f.map.apply(src.unit()) == tgt.unit();
  out.report.add("unital", unital, unital ? "" : "f(1) != 1");
  out.surjective = rank(f.map) == tgt.dim();
  return out;
}

AlgebraHom compose(const AlgebraHom& g, const AlgebraHom& f) {
  if (f.target.dim() != g.source.dim()) throw std::invalid_argument("compose: dimension mismatch");
  return AlgebraHom{f.source, g.target, g.map * f.map};
}

}  // namespace joinalg
