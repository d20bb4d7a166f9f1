#include "joinalg/hopf.hpp"

#include <stdexcept>

namespace joinalg {

namespace {

/// Label of the first basis element on which two maps differ, if any.
std::string first_difference(const Matrix& a, const Matrix& b, const Space& source) {
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (a.column(c) != b.column(c)) return source.label(c);
  }
  return {};
}

void add_equality(Report& report, const std::string& axiom, const Matrix& lhs, const Matrix& rhs,
                  const Space& source) {
  std::string witness = first_difference(lhs, rhs, source);
  report.add(axiom, witness.empty(), witness.empty() ? "" : "fails on " + witness);
}

}  // namespace

Matrix unit_map(const Algebra& a) {
  Matrix m(a.dim(), 1);
  m.set_column(0, a.unit());
  return m;
}

HopfAlgebra make_hopf(Algebra algebra, Matrix coproduct, Matrix counit, Matrix antipode,
                      std::optional<Matrix> antipode_inverse) {
  const std::size_t n = algebra.dim();
  if (coproduct.rows() != n * n || coproduct.cols() != n) {
    throw std::invalid_argument("make_hopf: coproduct must be dim² x dim");
  }
  if (counit.rows() != 1 || counit.cols() != n) throw std::invalid_argument("make_hopf: counit must be 1 x dim");
  if (antipode.rows() != n || antipode.cols() != n) throw std::invalid_argument("make_hopf: antipode must be dim x dim");
  HopfAlgebra h{std::move(algebra), std::move(coproduct), std::move(counit), std::move(antipode), Matrix()};
  if (antipode_inverse) {
    if (antipode_inverse->rows() != n || antipode_inverse->cols() != n) {
      throw std::invalid_argument("make_hopf: antipode inverse must be dim x dim");
    }
    h.antipode_inverse = std::move(*antipode_inverse);
  } else if (auto inv = inverse(h.antipode)) {
    h.antipode_inverse = std::move(*inv);
  }
  return h;
}

Report check_hopf(const HopfAlgebra& h) {
  Report report = check_algebra(h.algebra);
  const std::size_t n = h.dim();
  const Space& s = h.algebra.space();
  const Matrix id = Matrix::identity(n);
  const Matrix& delta = h.coproduct;
  const Matrix& eps = h.counit;

  add_equality(report, "coassociativity", kron(delta, id) * delta, kron(id, delta) * delta, s);
  add_equality(report, "left_counit", kron(eps, id) * delta, id, s);
  add_equality(report, "right_counit", kron(id, eps) * delta, id, s);

  const Algebra hh = tensor_algebra(h.algebra, h.algebra);
  std::string witness;
  for (std::size_t i = 0; i < n && witness.empty(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = delta.apply(to_dense(h.algebra.product(i, j), n));
      if (lhs != hh.multiply(delta.column(i), delta.column(j))) {
        witness = "fails on (" + s.label(i) + ", " + s.label(j) + ")";
        break;
      }
    }
  }
  report.add("coproduct_multiplicative", witness.empty(), witness);
  bool unital = delta.apply(h.algebra.unit()) == hh.unit();
  report.add("coproduct_unital", unital, unital ? "" : "Δ(1) != 1⊗1");

  witness.clear();
  for (std::size_t i = 0; i < n && witness.empty(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar lhs = eps.apply(to_dense(h.algebra.product(i, j), n))[0];
      if (lhs != eps(0, i) * eps(0, j)) {
        witness = "fails on (" + s.label(i) + ", " + s.label(j) + ")";
        break;
      }
    }
  }
  report.add("counit_multiplicative", witness.empty(), witness);
  bool counit_unital = eps.apply(h.algebra.unit())[0] == 1;
  report.add("counit_unital", counit_unital, counit_unital ? "" : "ε(1) != 1");

  const Matrix m = h.algebra.multiplication_map();
  const Matrix unit_counit = unit_map(h.algebra) * eps;
  add_equality(report, "left_antipode", m * kron(h.antipode, id) * delta, unit_counit, s);
  add_equality(report, "right_antipode", m * kron(id, h.antipode) * delta, unit_counit, s);

  if (!h.has_bijective_antipode()) {
    report.add("antipode_bijective", false, "antipode is singular");
  } else {
    bool ok = h.antipode_inverse * h.antipode == id && h.antipode * h.antipode_inverse == id;
    report.add("antipode_bijective", ok, ok ? "" : "stored inverse is not a two-sided inverse of S");
  }
  return report;
}

HopfAlgebra function_hopf(const FiniteGroup& g) {
  const std::size_t n = g.order();
  Algebra alg = function_algebra(g.names());
  Matrix delta(n * n, n);
  Matrix eps(1, n);
  Matrix s(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) delta(a * n + b, g.mul(a, b)) = 1;
    s(g.inv(a), a) = 1;
  }
  eps(0, g.identity()) = 1;
  return make_hopf(std::move(alg), std::move(delta), std::move(eps), std::move(s));
}

HopfAlgebra group_hopf(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::string> labels;
  std::vector<StructureConstant> constants;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back("u_" + g.name(a));
    for (std::size_t b = 0; b < n; ++b) constants.push_back({a, b, g.mul(a, b), Scalar(1)});
  }
  Algebra alg(Space(std::move(labels)), constants, unit_vector(n, g.identity()));
  Matrix delta(n * n, n);
  Matrix eps(1, n);
  Matrix s(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    delta(a * n + a, a) = 1;
    eps(0, a) = 1;
    s(g.inv(a), a) = 1;
  }
  return make_hopf(std::move(alg), std::move(delta), std::move(eps), std::move(s));
}

HopfAlgebra trivial_hopf() {
  Matrix one = Matrix::identity(1);
  return make_hopf(Algebra::ground_field(), one, one, one);
}

Matrix sweedler_legs(const HopfAlgebra& h, std::size_t n) {
  if (n < 2) throw std::invalid_argument("sweedler_legs: need at least two legs");
  Matrix legs = h.coproduct;
  const Matrix id = Matrix::identity(h.dim());
  for (std::size_t k = 2; k < n; ++k) legs = kron(legs, id) * h.coproduct;
  return legs;
}

}  // namespace joinalg
