#include "joinalg/comodule.hpp"

#include <stdexcept>

namespace joinalg {

namespace {

bool columns_equal(const Matrix& a, const Matrix& b, const Space& source, std::string& witness) {
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (a.column(c) != b.column(c)) {
      witness = "fails on " + source.label(c);
      return false;
    }
  }
  return true;
}

void require_shapes(const ComoduleAlgebra& pa) {
  if (pa.coaction.rows() != pa.dim_p() * pa.dim_h() || pa.coaction.cols() != pa.dim_p()) {
    throw std::invalid_argument("coaction must be (dim P · dim H) x dim P");
  }
}

}  // namespace

Report check_comodule(const ComoduleAlgebra& pa) {
  require_shapes(pa);
  Report report;
  const std::size_t np = pa.dim_p();
  const std::size_t nh = pa.dim_h();
  const Matrix& delta = pa.coaction;
  const Space& s = pa.algebra.space();

  const Algebra ph = tensor_algebra(pa.algebra, pa.hopf.algebra);
  std::string witness;
  for (std::size_t i = 0; i < np && witness.empty(); ++i) {
    for (std::size_t j = 0; j < np; ++j) {
      Vector lhs = delta.apply(to_dense(pa.algebra.product(i, j), np));
      if (lhs != ph.multiply(delta.column(i), delta.column(j))) {
        witness = "fails on (" + s.label(i) + ", " + s.label(j) + ")";
        break;
      }
    }
  }
  report.add("coaction_multiplicative", witness.empty(), witness);
  bool unital = delta.apply(pa.algebra.unit()) == ph.unit();
  report.add("coaction_unital", unital, unital ? "" : "δ(1) != 1⊗1");

  const Matrix id_p = Matrix::identity(np);
  const Matrix id_h = Matrix::identity(nh);
  witness.clear();
  columns_equal(kron(delta, id_h) * delta, kron(id_p, pa.hopf.coproduct) * delta, s, witness);
  report.add("coassociativity", witness.empty(), witness);
  witness.clear();
  columns_equal(kron(id_p, pa.hopf.counit) * delta, id_p, s, witness);
  report.add("counit", witness.empty(), witness);
  return report;
}

Subalgebra coinvariants(const ComoduleAlgebra& pa) {
  require_shapes(pa);
  const Matrix trivial = kron(Matrix::identity(pa.dim_p()), unit_map(pa.hopf.algebra));
  Subspace fixed = kernel(pa.coaction - trivial);
  Subalgebra b;
  try {
    b = subalgebra_from_subspace(pa.algebra, fixed);
  } catch (const NotClosed& e) {
    throw ConstructionError(std::string("coinvariants are not a subalgebra: ") + e.what());
  }
  if (!b.unital) throw ConstructionError("coinvariants do not contain the unit");
  return b;
}

BalancedTensor balanced_tensor(const ComoduleAlgebra& pa, const Subalgebra& coinvariant) {
  const std::size_t np = pa.dim_p();
  const Algebra& p = pa.algebra;
  std::vector<SparseVector> relations;
  for (const auto& b : coinvariant.subspace.basis()) {
    // Left and right multiplication by b on the basis of P.
    std::vector<Vector> right_mult(np), left_mult(np);
    for (std::size_t i = 0; i < np; ++i) {
      Vector e = unit_vector(np, i);
      right_mult[i] = p.multiply(e, b);
      left_mult[i] = p.multiply(b, e);
    }
    for (std::size_t i = 0; i < np; ++i) {
      for (std::size_t j = 0; j < np; ++j) {
        // (e_i b) ⊗ e_j - e_i ⊗ (b e_j)
        Vector rel = kron(right_mult[i], unit_vector(np, j)) - kron(unit_vector(np, i), left_mult[j]);
        SparseVector sparse = to_sparse(rel);
        if (!sparse.empty()) relations.push_back(std::move(sparse));
      }
    }
  }
  return BalancedTensor{quotient(Subspace::span_sparse(np * np, std::move(relations)))};
}

Matrix lifted_canonical(const ComoduleAlgebra& pa) {
  require_shapes(pa);
  const std::size_t np = pa.dim_p();
  const std::size_t nh = pa.dim_h();
  Matrix can(np * nh, np * np);
  for (std::size_t q = 0; q < np; ++q) {
    for (std::size_t row = 0; row < np * nh; ++row) {
      const Scalar& d = pa.coaction(row, q);
      if (is_zero(d)) continue;
      const std::size_t q0 = row / nh;
      const std::size_t g = row % nh;
      for (std::size_t p = 0; p < np; ++p) {
        for (const auto& [r, v] : pa.algebra.product(p, q0)) can(r * nh + g, p * np + q) += d * v;
      }
    }
  }
  return can;
}

CanonicalMap canonical_map(const ComoduleAlgebra& pa, const BalancedTensor& balanced) {
  const Matrix lifted = lifted_canonical(pa);
  CanonicalMap out;
  out.well_defined = (lifted * balanced.quotient.killed.inclusion()).is_zero();
  out.matrix = lifted * balanced.quotient.section;
  out.rank = rank(out.matrix);
  out.bijective = out.well_defined && out.rank == balanced.dim() && out.rank == out.matrix.rows();
  return out;
}

Matrix delta_left(const ComoduleAlgebra& pa) {
  require_shapes(pa);
  if (!pa.hopf.has_bijective_antipode()) throw PreconditionFailed("δ^L needs a bijective antipode");
  const Matrix flip = flip_matrix(pa.dim_p(), pa.dim_h());
  return kron(pa.hopf.antipode_inverse, Matrix::identity(pa.dim_p())) * flip * pa.coaction;
}

LinearSystem strong_connection_system(const ComoduleAlgebra& pa, bool require_unital) {
  require_shapes(pa);
  const std::size_t np = pa.dim_p();
  const std::size_t nh = pa.dim_h();
  const Matrix& delta = pa.coaction;
  const Matrix& cop = pa.hopf.coproduct;
  const Matrix dl = delta_left(pa);
  const Matrix can = lifted_canonical(pa);
  auto unknown = [&](std::size_t a, std::size_t b, std::size_t h) { return (a * np + b) * nh + h; };

  LinearSystem system(np * np * nh);

  // (id⊗δ)∘ℓ = (ℓ⊗id)∘Δ, one equation per (a, b', g, h).
  for (std::size_t b2 = 0; b2 < np; ++b2) {
    for (std::size_t g = 0; g < nh; ++g) {
      const SparseVector drow = delta.sparse_row(b2 * nh + g);
      for (std::size_t h = 0; h < nh; ++h) {
        SparseVector crow;
        for (std::size_t h2 = 0; h2 < nh; ++h2) {
          if (!is_zero(cop(h2 * nh + g, h))) crow.emplace_back(h2, cop(h2 * nh + g, h));
        }
        if (drow.empty() && crow.empty()) continue;
        for (std::size_t a = 0; a < np; ++a) {
          SparseVector eq;
          for (const auto& [b, v] : drow) eq.emplace_back(unknown(a, b, h), v);
          for (const auto& [h2, v] : crow) eq.emplace_back(unknown(a, b2, h2), -v);
          system.add_equation(std::move(eq), Scalar(0));
        }
      }
    }
  }

  // (δ^L⊗id)∘ℓ = (id⊗ℓ)∘Δ, one equation per (g, a', b, h).
  for (std::size_t g = 0; g < nh; ++g) {
    for (std::size_t a2 = 0; a2 < np; ++a2) {
      const SparseVector lrow = dl.sparse_row(g * np + a2);
      for (std::size_t h = 0; h < nh; ++h) {
        SparseVector crow;
        for (std::size_t h2 = 0; h2 < nh; ++h2) {
          if (!is_zero(cop(g * nh + h2, h))) crow.emplace_back(h2, cop(g * nh + h2, h));
        }
        if (lrow.empty() && crow.empty()) continue;
        for (std::size_t b = 0; b < np; ++b) {
          SparseVector eq;
          for (const auto& [a, v] : lrow) eq.emplace_back(unknown(a, b, h), v);
          for (const auto& [h2, v] : crow) eq.emplace_back(unknown(a2, b, h2), -v);
          system.add_equation(std::move(eq), Scalar(0));
        }
      }
    }
  }

  // lifted canonical ∘ ℓ = 1⊗id.
  const Vector& unit_p = pa.algebra.unit();
  for (std::size_t r = 0; r < np * nh; ++r) {
    const SparseVector crow = can.sparse_row(r);
    for (std::size_t h = 0; h < nh; ++h) {
      Scalar rhs = (r % nh == h) ? unit_p[r / nh] : Scalar(0);
      SparseVector eq;
      for (const auto& [k, v] : crow) eq.emplace_back(k * nh + h, v);
      system.add_equation(std::move(eq), std::move(rhs));
    }
  }

  if (require_unital) {
    const Vector& unit_h = pa.hopf.algebra.unit();
    const Vector one_one = kron(unit_p, unit_p);
    for (std::size_t k = 0; k < np * np; ++k) {
      SparseVector eq;
      for (std::size_t h = 0; h < nh; ++h) {
        if (!is_zero(unit_h[h])) eq.emplace_back(k * nh + h, unit_h[h]);
      }
      system.add_equation(std::move(eq), one_one[k]);
    }
  }
  return system;
}

ConnectionSolve solve_strong_connection(const ComoduleAlgebra& pa, bool require_unital) {
  const LinearSystem system = strong_connection_system(pa, require_unital);
  const SystemSolution solved = solve_system(system);
  ConnectionSolve out;
  out.unknowns = system.unknowns();
  out.equations = system.equations();
  out.rank = solved.rank;
  out.feasible = solved.feasible;
  const std::size_t np = pa.dim_p();
  const std::size_t nh = pa.dim_h();
  if (solved.feasible) {
    StrongConnection conn;
    conn.unital = require_unital;
    conn.ell = Matrix(np * np, nh);
    for (std::size_t k = 0; k < np * np; ++k) {
      for (std::size_t h = 0; h < nh; ++h) conn.ell(k, h) = solved.solution[k * nh + h];
    }
    out.connection = std::move(conn);
  } else {
    auto multipliers = infeasibility_multipliers(system);
    if (!multipliers) throw ConstructionError("elimination reported infeasible but no multipliers exist");
    out.infeasibility = InfeasibilityCertificate{*solved.inconsistent_equation, std::move(*multipliers)};
  }
  return out;
}

Report check_strong_connection(const ComoduleAlgebra& pa, const StrongConnection& connection) {
  require_shapes(pa);
  Report report;
  const std::size_t np = pa.dim_p();
  const std::size_t nh = pa.dim_h();
  const Matrix& ell = connection.ell;
  const Space& hs = pa.hopf.algebra.space();
  if (ell.rows() != np * np || ell.cols() != nh) {
    report.add("shape", false, "ℓ must be dim P² x dim H");
    return report;
  }
  const Matrix id_p = Matrix::identity(np);
  const Matrix id_h = Matrix::identity(nh);
  std::string witness;

  columns_equal(kron(id_p, pa.coaction) * ell, kron(ell, id_h) * pa.hopf.coproduct, hs, witness);
  report.add("right_colinear", witness.empty(), witness);
  witness.clear();
  if (pa.hopf.has_bijective_antipode()) {
    columns_equal(kron(delta_left(pa), id_p) * ell, kron(id_h, ell) * pa.hopf.coproduct, hs, witness);
  } else {
    witness = "antipode is not bijective";
  }
  report.add("left_colinear", witness.empty(), witness);
  witness.clear();
  columns_equal(lifted_canonical(pa) * ell, kron(unit_map(pa.algebra), id_h), hs, witness);
  report.add("splitting", witness.empty(), witness);
  witness.clear();
  columns_equal(pa.algebra.multiplication_map() * ell, unit_map(pa.algebra) * pa.hopf.counit, hs, witness);
  report.add("multiplication_counit", witness.empty(), witness);
  if (connection.unital) {
    bool ok = ell.apply(pa.hopf.algebra.unit()) == kron(pa.algebra.unit(), pa.algebra.unit());
    report.add("unital", ok, ok ? "" : "ℓ(1) != 1⊗1");
  }
  return report;
}

TranslationInverse translation_inverse(const ComoduleAlgebra& pa, const StrongConnection& connection) {
  const BalancedTensor balanced = balanced_tensor(pa, coinvariants(pa));
  const CanonicalMap can = canonical_map(pa, balanced);
  return translation_inverse(pa, connection, balanced, can);
}

TranslationInverse translation_inverse(const ComoduleAlgebra& pa, const StrongConnection& connection,
                                       const BalancedTensor& balanced, const CanonicalMap& can) {
  const std::size_t np = pa.dim_p();
  const std::size_t nh = pa.dim_h();
  const Matrix& ell = connection.ell;
  Matrix lifted(np * np, np * nh);
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t h = 0; h < nh; ++h) {
      for (std::size_t k = 0; k < np * np; ++k) {
        const Scalar& c = ell(k, h);
        if (is_zero(c)) continue;
        const std::size_t a = k / np;
        const std::size_t b = k % np;
        for (const auto& [r, v] : pa.algebra.product(p, a)) lifted(r * np + b, p * nh + h) += c * v;
      }
    }
  }
  TranslationInverse out;
  out.map = balanced.projection() * lifted;
  out.can_after_translation = can.matrix * out.map == Matrix::identity(np * nh);
  out.translation_after_can = out.map * can.matrix == Matrix::identity(balanced.dim());
  return out;
}

Principality is_principal(const ComoduleAlgebra& pa) {
  Principality out;
  out.solve = solve_strong_connection(pa, false);
  out.principal = out.solve.feasible;
  return out;
}

}  // namespace joinalg
