#include "joinalg/fusion.hpp"

#include <stdexcept>

namespace joinalg {

namespace {

Subspace span_of_unit_tensor_full(const Vector& unit, std::size_t right_dim) {
  return tensor(Subspace::span(unit.size(), {unit}), Subspace::full(right_dim));
}

}  // namespace

Report check_base(const BaseWithEnds& base) {
  Report report;
  HomReport r1 = check_hom(base.end1);
  HomReport r2 = check_hom(base.end2);
  report.merge(r1.report, "end1.");
  report.merge(r2.report, "end2.");
  report.add("end1.surjective", r1.surjective);
  report.add("end2.surjective", r2.surjective);
  bool shapes = base.end1.source.dim() == base.base.dim() && base.end2.source.dim() == base.base.dim();
  bool joint = false;
  if (shapes) {
    Matrix stacked(base.end1.map.rows() + base.end2.map.rows(), base.base.dim());
    for (std::size_t c = 0; c < base.base.dim(); ++c) {
      for (std::size_t r = 0; r < base.end1.map.rows(); ++r) stacked(r, c) = base.end1.map(r, c);
      for (std::size_t r = 0; r < base.end2.map.rows(); ++r) stacked(base.end1.map.rows() + r, c) = base.end2.map(r, c);
    }
    joint = rank(stacked) == stacked.rows();
  }
  report.add("joint_surjective", joint, joint ? "" : "π1 ⊕ π2 is not onto C1 ⊕ C2");
  return report;
}

ChainInterval ChainInterval::make(std::size_t m) {
  if (m == 0) throw PreconditionFailed("chain resolution must be at least 1");
  std::vector<std::string> points;
  for (std::size_t k = 0; k <= m; ++k) points.push_back(to_string(Scalar(static_cast<long>(k), static_cast<long>(m))));
  Algebra c = function_algebra(points);
  Algebra k = Algebra::ground_field();
  Matrix ev1(1, m + 1);
  ev1(0, m) = 1;
  Matrix ev0(1, m + 1);
  ev0(0, 0) = 1;
  ChainInterval chain;
  chain.resolution = m;
  chain.ends = BaseWithEnds{c, AlgebraHom{c, k, ev1}, AlgebraHom{c, k, ev0}};
  return chain;
}

Report check_sqrt_pair(const BaseWithEnds& base, const SqrtPair& pair) {
  Report report;
  const Algebra& c = base.base;
  if (pair.root.size() != c.dim() || pair.complement.size() != c.dim()) {
    report.add("shape", false, "square roots must be elements of C");
    return report;
  }
  Vector squares = c.multiply(pair.root, pair.root) + c.multiply(pair.complement, pair.complement);
  report.add("sum_of_squares", squares == c.unit(), "s² + s'² must equal 1");
  report.add("root_vanishes_at_end2", is_zero_vector(base.end2.map.apply(pair.root)), "π2(s) must vanish");
  report.add("complement_vanishes_at_end1", is_zero_vector(base.end1.map.apply(pair.complement)),
             "π1(s') must vanish");
  report.add("commute", c.multiply(pair.root, pair.complement) == c.multiply(pair.complement, pair.root),
             "s and s' must commute");
  return report;
}

SqrtPair make_sqrt_pair(const ChainInterval& chain, const std::vector<Scalar>& profile) {
  const std::size_t n = chain.points();
  if (profile.size() != n) {
    throw MalformedInput("profile needs " + std::to_string(n) + " values, got " + std::to_string(profile.size()));
  }
  if (!is_zero(profile.front()) || profile.back() != 1) {
    throw MalformedInput("endpoint constraint violated: profile must start at 0 and end at 1");
  }
  SqrtPair pair{profile, Vector(n)};
  for (std::size_t k = 0; k < n; ++k) {
    Scalar rest = 1 - profile[k] * profile[k];
    auto root = rational_sqrt(rest);
    if (!root) {
      throw MalformedInput("not a perfect square at point " + std::to_string(k) + ": 1 - (" +
                           to_string(profile[k]) + ")² = " + to_string(rest));
    }
    pair.complement[k] = *root;
  }
  return pair;
}

FusionAlgebra build_fusion(const BaseWithEnds& base, const Algebra& left, const Algebra& right) {
  const std::size_t fibre = left.dim() * right.dim();
  Algebra ambient = tensor_algebra(tensor_algebra(base.base, left), right);

  const Subspace left_corner = tensor(Subspace::full(left.dim()), Subspace::span(right.dim(), {right.unit()}));
  const Subspace right_corner = tensor(Subspace::span(left.dim(), {left.unit()}), Subspace::full(right.dim()));
  const Matrix id = Matrix::identity(fibre);
  const Subspace at_end1 = preimage(kron(base.end1.map, id), tensor(Subspace::full(base.end1.target.dim()), left_corner));
  const Subspace at_end2 = preimage(kron(base.end2.map, id), tensor(Subspace::full(base.end2.target.dim()), right_corner));

  FusionAlgebra out{base, left, right, std::move(ambient), {}};
  try {
    out.carrier = subalgebra_from_subspace(out.ambient, intersection(at_end1, at_end2));
  } catch (const NotClosed& e) {
    throw ConstructionError(std::string("fusion carrier: ") + e.what());
  }
  if (!out.carrier.unital) throw ConstructionError("fusion carrier does not contain the unit");
  return out;
}

std::optional<Matrix> restrict_coaction(const Matrix& ambient_coaction, const Subspace& carrier, std::size_t dim_h) {
  const std::size_t d = carrier.dim();
  Matrix out(d * dim_h, d);
  const Subspace full_h = Subspace::full(dim_h);
  for (std::size_t i = 0; i < d; ++i) {
    auto coords = tensor_coordinates(carrier, full_h, ambient_coaction.apply(carrier.basis_vector(i)));
    if (!coords) return std::nullopt;
    out.set_column(i, *coords);
  }
  return out;
}

EquivariantFusion build_equivariant_fusion(const BaseWithEnds& base, const ComoduleAlgebra& pa) {
  const std::size_t np = pa.dim_p();
  const std::size_t nh = pa.dim_h();
  const std::size_t fibre = np * nh;
  EquivariantFusion ef;
  ef.base = base;
  ef.source = pa;
  Algebra c_p = tensor_algebra(base.base, pa.algebra);
  ef.ambient = tensor_algebra(c_p, pa.hopf.algebra);
  ef.ambient_coaction = kron(Matrix::identity(base.base.dim() * np), pa.hopf.coproduct);

  const Subspace coaction_image = image(pa.coaction);
  const Subspace h_fibre = span_of_unit_tensor_full(pa.algebra.unit(), nh);
  const Matrix id = Matrix::identity(fibre);
  const Matrix pi1 = kron(base.end1.map, id);
  const Matrix pi2 = kron(base.end2.map, id);
  const std::size_t c1 = base.end1.target.dim();
  const std::size_t c2 = base.end2.target.dim();
  const Subspace at_end1 = preimage(pi1, tensor(Subspace::full(c1), coaction_image));
  const Subspace at_end2 = preimage(pi2, tensor(Subspace::full(c2), h_fibre));

  try {
    ef.carrier = subalgebra_from_subspace(ef.ambient, intersection(at_end1, at_end2));
    ef.report.add("closed", true);
  } catch (const NotClosed& e) {
    ef.report.add("closed", false, e.what());
    return ef;
  }
  ef.report.add("unital", ef.carrier.unital);

  // Coaction images at the two ends: C1⊗δ(P)⊗H and C2⊗1⊗H⊗H.
  const Subspace end1_target = tensor(Subspace::full(c1), tensor(coaction_image, Subspace::full(nh)));
  const Subspace end2_target = tensor(Subspace::full(c2), tensor(h_fibre, Subspace::full(nh)));
  const Matrix pi1_h = kron(pi1, Matrix::identity(nh));
  const Matrix pi2_h = kron(pi2, Matrix::identity(nh));
  bool end1_ok = true;
  bool end2_ok = true;
  for (const auto& x : ef.carrier.subspace.basis()) {
    Vector y = ef.ambient_coaction.apply(x);
    end1_ok = end1_ok && end1_target.contains(pi1_h.apply(y));
    end2_ok = end2_ok && end2_target.contains(pi2_h.apply(y));
  }
  ef.report.add("coaction_end1_in_C1⊗δ(P)⊗H", end1_ok);
  ef.report.add("coaction_end2_in_C2⊗1⊗H⊗H", end2_ok);

  auto restricted = restrict_coaction(ef.ambient_coaction, ef.carrier.subspace, nh);
  ef.report.add("coaction_corestricts", restricted.has_value());
  if (!restricted) return ef;
  ef.comodule = ComoduleAlgebra{ef.carrier.algebra, pa.hopf, std::move(*restricted)};
  ef.report.merge(check_comodule(ef.comodule), "comodule.");
  return ef;
}

Subalgebra coinvariants_of_fusion(const EquivariantFusion& ef) { return coinvariants(ef.comodule); }

LiftedConnection lift_connection(const EquivariantFusion& ef, const StrongConnection& ell, const SqrtPair& pair) {
  const ComoduleAlgebra& pa = ef.source;
  if (!check_strong_connection(pa, ell).ok()) throw PreconditionFailed("source ℓ is not a strong connection");
  if (!check_sqrt_pair(ef.base, pair).ok()) throw PreconditionFailed("invalid square-root pair");
  if (!ef.report.ok()) throw PreconditionFailed("equivariant fusion failed its own checks");

  const std::size_t nc = ef.base.base.dim();
  const std::size_t np = pa.dim_p();
  const std::size_t nh = pa.dim_h();
  const std::size_t n = nc * np * nh;
  auto amb = [&](std::size_t c, std::size_t p, std::size_t h) { return (c * np + p) * nh + h; };

  const Matrix legs3 = sweedler_legs(pa.hopf, 3);
  const Matrix& legs2 = pa.hopf.coproduct;
  const Matrix& s = pa.hopf.antipode;
  const SparseVector root = to_sparse(pair.root);
  const SparseVector complement = to_sparse(pair.complement);
  const SparseVector unit_p = to_sparse(pa.algebra.unit());

  LiftedConnection out;
  out.ambient = Matrix(n * n, nh);
  for (std::size_t h = 0; h < nh; ++h) {
    // s ⊗ ℓ(h₂)⟨1⟩ ⊗ S(h₁) ⊗ s ⊗ ℓ(h₂)⟨2⟩ ⊗ h₃
    for (std::size_t a = 0; a < nh; ++a) {
      for (std::size_t b = 0; b < nh; ++b) {
        for (std::size_t c = 0; c < nh; ++c) {
          const Scalar& w = legs3((a * nh + b) * nh + c, h);
          if (is_zero(w)) continue;
          for (std::size_t k = 0; k < np * np; ++k) {
            const Scalar& lambda = ell.ell(k, b);
            if (is_zero(lambda)) continue;
            const std::size_t p = k / np;
            const std::size_t q = k % np;
            for (std::size_t r = 0; r < nh; ++r) {
              const Scalar& sigma = s(r, a);
              if (is_zero(sigma)) continue;
              const Scalar coeff = w * lambda * sigma;
              for (const auto& [t1, x1] : root) {
                for (const auto& [t2, x2] : root) {
                  out.ambient(amb(t1, p, r) * n + amb(t2, q, c), h) += coeff * x1 * x2;
                }
              }
            }
          }
        }
      }
    }
    // s' ⊗ 1 ⊗ S(h₁) ⊗ s' ⊗ 1 ⊗ h₂
    for (std::size_t a = 0; a < nh; ++a) {
      for (std::size_t b = 0; b < nh; ++b) {
        const Scalar& w = legs2(a * nh + b, h);
        if (is_zero(w)) continue;
        for (std::size_t r = 0; r < nh; ++r) {
          const Scalar& sigma = s(r, a);
          if (is_zero(sigma)) continue;
          for (const auto& [t1, x1] : complement) {
            for (const auto& [p1, u1] : unit_p) {
              for (const auto& [t2, x2] : complement) {
                for (const auto& [p2, u2] : unit_p) {
                  out.ambient(amb(t1, p1, r) * n + amb(t2, p2, b), h) += w * sigma * x1 * u1 * x2 * u2;
                }
              }
            }
          }
        }
      }
    }
  }

  // Endpoint images of each leg.
  const std::size_t fibre = np * nh;
  const Matrix id_fibre = Matrix::identity(fibre);
  const Subspace end1_target = tensor(Subspace::full(ef.base.end1.target.dim()), image(pa.coaction));
  const Subspace end2_target =
      tensor(Subspace::full(ef.base.end2.target.dim()), span_of_unit_tensor_full(pa.algebra.unit(), nh));
  const Matrix pi1 = kron(ef.base.end1.map, id_fibre);
  const Matrix pi2 = kron(ef.base.end2.map, id_fibre);
  bool leg1_end1 = true, leg1_end2 = true, leg2_end1 = true, leg2_end2 = true;
  for (std::size_t h = 0; h < nh; ++h) {
    const Vector col = out.ambient.column(h);
    leg1_end1 = leg1_end1 && left_leg_in(end1_target, n, apply_left_factor(pi1, n, col));
    leg1_end2 = leg1_end2 && left_leg_in(end2_target, n, apply_left_factor(pi2, n, col));
    leg2_end1 = leg2_end1 && right_leg_in(n, end1_target, apply_right_factor(n, pi1, col));
    leg2_end2 = leg2_end2 && right_leg_in(n, end2_target, apply_right_factor(n, pi2, col));
  }
  out.report.add("leg1_end1_in_C1⊗δ(P)", leg1_end1);
  out.report.add("leg1_end2_in_C2⊗1⊗H", leg1_end2);
  out.report.add("leg2_end1_in_C1⊗δ(P)", leg2_end1);
  out.report.add("leg2_end2_in_C2⊗1⊗H", leg2_end2);

  const Subspace& carrier = ef.carrier.subspace;
  const std::size_t d = carrier.dim();
  out.connection.ell = Matrix(d * d, nh);
  bool corestricts = true;
  for (std::size_t h = 0; h < nh && corestricts; ++h) {
    auto coords = tensor_coordinates(carrier, carrier, out.ambient.column(h));
    if (!coords) {
      corestricts = false;
    } else {
      out.connection.ell.set_column(h, *coords);
    }
  }
  out.report.add("corestricts_to_carrier⊗carrier", corestricts);
  if (!corestricts) return out;
  out.report.merge(check_strong_connection(ef.comodule, out.connection), "lifted.");
  return out;
}

TheoremCertificate verify_theorem_main(const BaseWithEnds& base, const ComoduleAlgebra& pa, const SqrtPair& pair) {
  if (!check_comodule(pa).ok()) throw PreconditionFailed("input is not a comodule algebra");
  ConnectionSolve solved = solve_strong_connection(pa, false);
  if (!solved.feasible) throw PreconditionFailed("input comodule algebra is not principal");
  return verify_theorem_main(base, pa, pair, *solved.connection);
}

TheoremCertificate verify_theorem_main(const BaseWithEnds& base, const ComoduleAlgebra& pa, const SqrtPair& pair,
                                       const StrongConnection& source_connection) {
  if (!check_base(base).ok()) throw PreconditionFailed("base algebra with ends failed its checks");
  if (!check_comodule(pa).ok()) throw PreconditionFailed("input is not a comodule algebra");
  TheoremCertificate cert;
  cert.source_connection = source_connection;
  cert.source_report = check_strong_connection(pa, source_connection);
  if (!cert.source_report.ok()) throw PreconditionFailed("source ℓ is not a strong connection");
  cert.fusion = build_equivariant_fusion(base, pa);
  if (!cert.fusion.report.ok()) throw ConstructionError("equivariant fusion failed its checks");
  cert.lifted = lift_connection(cert.fusion, source_connection, pair);
  cert.fusion_principality = is_principal(cert.fusion.comodule);
  if (cert.fusion_principality.solve.connection) {
    cert.fusion_solver_report = check_strong_connection(cert.fusion.comodule, *cert.fusion_principality.solve.connection);
  } else {
    cert.fusion_solver_report.add("solver_feasible", false, "no strong connection on the fusion");
  }
  return cert;
}

PiecewiseParts piecewise_parts(std::size_t m, const ComoduleAlgebra& pa) {
  if (!check_comodule(pa).ok()) throw PreconditionFailed("input is not a comodule algebra");
  const std::size_t np = pa.dim_p();
  const std::size_t nh = pa.dim_h();
  PiecewiseParts parts;
  parts.chain = ChainInterval::make(m);
  const Algebra& c = parts.chain.ends.base;
  const Matrix& ev1 = parts.chain.ends.end1.map;
  const Matrix& ev0 = parts.chain.ends.end2.map;
  const Algebra c_p = tensor_algebra(c, pa.algebra);
  parts.ambient = tensor_algebra(c_p, pa.hopf.algebra);

  const Matrix id_ph = Matrix::identity(np * nh);
  const Matrix id_p = Matrix::identity(np);
  const Subspace h_fibre = span_of_unit_tensor_full(pa.algebra.unit(), nh);
  const Subspace scalars = Subspace::span(np, {pa.algebra.unit()});
  const Subalgebra coinv = coinvariants(pa);

  auto as_subalgebra = [](const Algebra& a, const Subspace& u, const std::string& name, Report& report) {
    try {
      Subalgebra s = subalgebra_from_subspace(a, u);
      report.add(name + "_closed", true);
      report.add(name + "_unital", s.unital);
      return s;
    } catch (const NotClosed& e) {
      report.add(name + "_closed", false, e.what());
      throw ConstructionError(name + " is not a subalgebra");
    }
  };
  parts.p1 = as_subalgebra(parts.ambient, preimage(kron(ev0, id_ph), h_fibre), "P1", parts.report);
  parts.p2 = as_subalgebra(parts.ambient, preimage(kron(ev1, id_ph), image(pa.coaction)), "P2", parts.report);
  parts.b1 = as_subalgebra(c_p, preimage(kron(ev0, id_p), scalars), "B1", parts.report);
  parts.b2 = as_subalgebra(c_p, preimage(kron(ev1, id_p), coinv.subspace), "B2", parts.report);

  const Matrix ambient_coaction = kron(Matrix::identity(c.dim() * np), pa.hopf.coproduct);
  const Matrix tensor_unit = kron(Matrix::identity(c.dim() * np), unit_map(pa.hopf.algebra));
  auto comodule_part = [&](const Subalgebra& part, const Subalgebra& expected, const std::string& name,
                           ComoduleAlgebra& out) {
    auto restricted = restrict_coaction(ambient_coaction, part.subspace, nh);
    parts.report.add(name + "_coaction_corestricts", restricted.has_value());
    if (!restricted) return;
    out = ComoduleAlgebra{part.algebra, pa.hopf, std::move(*restricted)};
    parts.report.merge(check_comodule(out), name + ".");
    const Subalgebra fixed = coinvariants(out);
    std::vector<Vector> in_ambient;
    for (const auto& v : fixed.subspace.basis()) in_ambient.push_back(part.inclusion().apply(v));
    const Subspace fixed_ambient = Subspace::span(part.subspace.ambient_dim(), in_ambient);
    std::vector<Vector> expected_ambient;
    for (const auto& y : expected.subspace.basis()) expected_ambient.push_back(tensor_unit.apply(y));
    const Subspace b_ambient = Subspace::span(part.subspace.ambient_dim(), expected_ambient);
    parts.report.add(name + "_coinvariants_equal_" + (name == "P1" ? "B1" : "B2"), fixed_ambient == b_ambient);
  };
  comodule_part(parts.p1, parts.b1, "P1", parts.p1_comodule);
  comodule_part(parts.p2, parts.b2, "P2", parts.p2_comodule);
  return parts;
}

PullbackVerdict pullback_identification(std::size_t first_m, std::size_t second_m, const ComoduleAlgebra& pa) {
  const std::size_t np = pa.dim_p();
  const std::size_t nh = pa.dim_h();
  const std::size_t fibre = np * nh;
  PullbackVerdict out;
  out.first = piecewise_parts(first_m, pa);
  out.second = piecewise_parts(second_m, pa);
  out.report.merge(out.first.report, "first.");
  out.report.merge(out.second.report, "second.");

  const std::size_t n1 = (first_m + 1) * fibre;
  const std::size_t n2 = (second_m + 1) * fibre;
  // P1 ⊕ P2 inside the sum of ambients.
  std::vector<SparseVector> generators;
  for (const auto& v : out.first.p1.subspace.sparse_basis()) generators.push_back(v);
  for (const auto& v : out.second.p2.subspace.sparse_basis()) {
    SparseVector shifted = v;
    for (auto& e : shifted) e.first += n1;
    generators.push_back(std::move(shifted));
  }
  const Subspace sum_space = Subspace::span_sparse(n1 + n2, std::move(generators));
  // (ev_1 ⊗ id)(p) - (ev_0 ⊗ id)(q) = 0
  Matrix matching(fibre, n1 + n2);
  for (std::size_t i = 0; i < fibre; ++i) {
    matching(i, first_m * fibre + i) = 1;
    matching(i, n1 + i) = -1;
  }
  out.fiber_product = intersection(sum_space, kernel(matching));

  const std::size_t m = first_m + second_m;
  out.glued = build_equivariant_fusion(ChainInterval::make(m).ends, pa);
  out.report.merge(out.glued.report, "glued.");
  if (!out.glued.report.ok()) return out;

  const std::size_t n = (m + 1) * fibre;
  out.gluing = Matrix(n1 + n2, n);
  for (std::size_t t = 0; t <= m; ++t) {
    for (std::size_t i = 0; i < fibre; ++i) {
      if (t <= first_m) out.gluing(t * fibre + i, t * fibre + i) = 1;
      if (t >= first_m) out.gluing(n1 + (t - first_m) * fibre + i, t * fibre + i) = 1;
    }
  }

  const Subspace& carrier = out.glued.carrier.subspace;
  const std::size_t d = carrier.dim();
  out.isomorphism = Matrix(out.fiber_product.dim(), d);
  bool lands = true;
  for (std::size_t i = 0; i < d; ++i) {
    auto coords = out.fiber_product.coordinates(out.gluing.apply(carrier.basis_vector(i)));
    if (!coords) {
      lands = false;
      break;
    }
    out.isomorphism.set_column(i, *coords);
  }
  out.report.add("lands_in_fiber_product", lands);
  if (!lands) return out;
  out.report.add("bijective", d == out.fiber_product.dim() && rank(out.isomorphism) == d,
                 "dim carrier = " + std::to_string(d) + ", dim fiber product = " +
                     std::to_string(out.fiber_product.dim()));

  const Algebra sum_algebra = direct_sum(out.first.ambient, out.second.ambient);
  out.report.add("unital", out.gluing.apply(out.glued.ambient.unit()) == sum_algebra.unit());
  const std::vector<Vector> basis = carrier.basis();
  std::vector<Vector> images;
  for (const auto& x : basis) images.push_back(out.gluing.apply(x));
  bool multiplicative = true;
  for (std::size_t i = 0; i < d && multiplicative; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (out.gluing.apply(out.glued.ambient.multiply(basis[i], basis[j])) !=
          sum_algebra.multiply(images[i], images[j])) {
        multiplicative = false;
        break;
      }
    }
  }
  out.report.add("multiplicative", multiplicative);

  const Matrix coaction1 = kron(Matrix::identity((first_m + 1) * np), pa.hopf.coproduct);
  const Matrix coaction2 = kron(Matrix::identity((second_m + 1) * np), pa.hopf.coproduct);
  bool colinear = true;
  for (std::size_t i = 0; i < d && colinear; ++i) {
    const Vector& g = images[i];
    Vector lhs = coaction1.apply(std::span<const Scalar>(g).subspan(0, n1));
    Vector rhs2 = coaction2.apply(std::span<const Scalar>(g).subspan(n1, n2));
    lhs.insert(lhs.end(), rhs2.begin(), rhs2.end());
    Vector rhs = apply_left_factor(out.gluing, nh, out.glued.ambient_coaction.apply(basis[i]));
    colinear = lhs == rhs;
  }
  out.report.add("colinear", colinear);
  return out;
}

}  // namespace joinalg
