#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "joinalg/certificate.hpp"
#include "joinalg/fusion.hpp"

namespace py = pybind11;
using namespace joinalg;

namespace {

py::object fraction(const Scalar& x) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(x));
}

py::list to_py(const Matrix& m) {
  py::list rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.append(fraction(m(r, c)));
    rows.append(row);
  }
  return rows;
}

py::list to_py(const std::vector<Scalar>& v) {
  py::list out;
  for (const auto& x : v) out.append(fraction(x));
  return out;
}

py::list to_py(const Report& r) {
  py::list out;
  for (const auto& item : r.items()) out.append(py::make_tuple(item.axiom, item.passed, item.detail));
  return out;
}

// Accepts str, int or fractions.Fraction.
Scalar from_py(const py::handle& x) { return parse_scalar(py::str(x).cast<std::string>()); }

// The JSON-level entry points take and return JSON text; the Python wrapper
// converts with the json module.
using JsonFn = std::function<Json(const Json&)>;
std::string through_json(const JsonFn& f, const std::string& text) {
  return f(parse_json_text(text)).dump();
}

}  // namespace

PYBIND11_MODULE(_joinalg, m) {
  m.doc() = "Exact finite-dimensional Hopf, comodule, fusion and join computations";
  m.attr("__version__") = JOINALG_VERSION;

  py::register_exception<MalformedInput>(m, "MalformedInput", PyExc_ValueError);
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", PyExc_RuntimeError);
  py::register_exception<ConstructionError>(m, "ConstructionError", PyExc_RuntimeError);

  py::class_<FiniteGroup>(m, "Group")
      .def(py::init<std::vector<std::vector<std::size_t>>, std::vector<std::string>>(), py::arg("table"),
           py::arg("names") = std::vector<std::string>{})
      .def_static("named", &FiniteGroup::named)
      .def_static("cyclic", &FiniteGroup::cyclic)
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("table", &FiniteGroup::table)
      .def_property_readonly("names", &FiniteGroup::names)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("__repr__", [](const FiniteGroup& g) { return "<Group of order " + std::to_string(g.order()) + ">"; });

  py::class_<FiniteGSet>(m, "GSet")
      .def(py::init<FiniteGroup, std::vector<std::vector<std::size_t>>>(), py::arg("group"), py::arg("action"))
      .def_static("regular", &FiniteGSet::regular)
      .def_static("trivial", &FiniteGSet::trivial)
      .def_static("disjoint_union", &FiniteGSet::disjoint_union)
      .def_property_readonly("group", &FiniteGSet::group)
      .def_property_readonly("size", &FiniteGSet::size)
      .def_property_readonly("table", &FiniteGSet::table)
      .def("is_free", [](const FiniteGSet& x) { return is_free(x); });

  m.def("enumerate_actions", &enumerate_actions, py::arg("group"), py::arg("size"));

  m.def("check_function_hopf", [](const FiniteGroup& g) { return to_py(check_hopf(function_hopf(g))); });
  m.def("check_group_hopf", [](const FiniteGroup& g) { return to_py(check_hopf(group_hopf(g))); });

  m.def(
      "solve_strong_connection",
      [](const FiniteGSet& x, bool unital) {
        const ComoduleAlgebra pa = fun_comodule(x);
        const ConnectionSolve s = solve_strong_connection(pa, unital);
        py::dict out;
        out["feasible"] = s.feasible;
        out["unknowns"] = s.unknowns;
        out["equations"] = s.equations;
        if (s.feasible) {
          out["ell"] = to_py(s.connection->ell);
          out["report"] = to_py(check_strong_connection(pa, *s.connection));
        } else {
          out["multipliers"] = to_py(s.infeasibility->multipliers);
          out["certified"] = certifies_infeasibility(strong_connection_system(pa, unital), s.infeasibility->multipliers);
        }
        return out;
      },
      py::arg("gset"), py::arg("unital") = false, "Strong connection on Fun(X) for a finite G-set X.");

  m.def("canonical_map_bijective", [](const FiniteGSet& x) {
    const ComoduleAlgebra pa = fun_comodule(x);
    return canonical_map(pa, balanced_tensor(pa, coinvariants(pa))).bijective;
  });
  m.def("coinvariant_dimension", [](const FiniteGSet& x) { return coinvariants(fun_comodule(x)).subspace.dim(); });

  m.def(
      "equivariant_fusion_dimensions",
      [](const FiniteGSet& x, std::size_t m) {
        const EquivariantFusion ef = build_equivariant_fusion(ChainInterval::make(m).ends, fun_comodule(x));
        return py::make_tuple(ef.carrier.subspace.dim(), coinvariants_of_fusion(ef).subspace.dim());
      },
      py::arg("gset"), py::arg("m"), "(dim of the fusion, dim of its coinvariants)");

  m.def(
      "verify_theorem_main",
      [](const FiniteGSet& x, std::size_t m, const py::list& profile) {
        std::vector<Scalar> values;
        for (auto v : profile) values.push_back(from_py(v));
        const ChainInterval chain = ChainInterval::make(m);
        const TheoremCertificate t = verify_theorem_main(chain.ends, fun_comodule(x), make_sqrt_pair(chain, values));
        py::dict out;
        out["verified"] = t.verified();
        out["constructive"] = t.constructive_verdict();
        out["solver"] = t.solver_verdict();
        out["carrier_dim"] = t.fusion.carrier.subspace.dim();
        out["ell"] = to_py(t.source_connection.ell);
        out["ell_tilde"] = to_py(t.lifted.connection.ell);
        out["report"] = to_py(t.lifted.report);
        return out;
      },
      py::arg("gset"), py::arg("m"), py::arg("profile"));

  m.def(
      "pullback_identification",
      [](const FiniteGSet& x, std::size_t a, std::size_t b) {
        const PullbackVerdict v = pullback_identification(a, b, fun_comodule(x));
        py::dict out;
        out["ok"] = v.report.ok();
        out["fiber_product_dim"] = v.fiber_product.dim();
        out["isomorphism"] = to_py(v.isomorphism);
        out["report"] = to_py(v.report);
        return out;
      },
      py::arg("gset"), py::arg("first_m"), py::arg("second_m"));

  m.def("discrete_join_points", [](std::size_t nx, std::size_t ny, std::size_t m) { return discrete_join(nx, ny, m).classes; });
  m.def("gauged_join_iso", [](const FiniteGSet& x, std::size_t m) {
    const JoinMapCheck c = gauged_join_iso(x, m);
    py::dict out;
    out["well_defined"] = c.well_defined;
    out["bijective"] = c.bijective;
    out["equivariant"] = c.equivariant;
    out["class_map"] = c.class_map;
    return out;
  });
  m.def("fun_of_join_vs_fusion", [](std::size_t nx, std::size_t ny, std::size_t m) {
    const JoinFusionCheck c = fun_of_join_vs_fusion(nx, ny, m);
    return py::make_tuple(c.report.ok(), c.join.classes, to_py(c.isomorphism));
  });
  m.def("diagonal_join_freeness", [](const FiniteGSet& x, std::size_t m) {
    const DiagonalFreeness d = diagonal_join_freeness(x, m);
    return py::make_tuple(d.action_free, d.fusion_principality.principal);
  });

  // JSON text in, JSON text out.
  m.def("_run_check", [](const std::string& t) { return through_json(run_check, t); });
  m.def("_run_solve_connection", [](const std::string& t, bool unital) {
    return through_json([&](const Json& j) { return run_solve_connection(j, unital); }, t);
  });
  m.def("_run_fusion", [](const std::string& t) { return through_json(run_fusion, t); });
  m.def("_run_classical", [](const std::string& t) { return through_json(run_classical, t); });
  m.def("_replay_certificate", [](const std::string& t) { return through_json(replay_certificate, t); });
  m.def("_load_document", [](const std::string& path) { return load_document(path).dump(); });
}
