#include "joinalg/certificate.hpp"

#include <sstream>

#include "joinalg/fusion.hpp"

namespace joinalg {

namespace {

Json new_certificate(const std::string& command, const Json& input) {
  Json cert;
  cert["command"] = command;
  cert["scenario"] = input.is_object() && input.contains("id") && input["id"].is_string() ? input["id"] : Json("");
  cert["tool"] = {{"name", "joinalg"}, {"version", JOINALG_VERSION}};
  cert["input"] = input;
  cert["options"] = Json::object();
  cert["verdicts"] = Json::object();
  cert["results"] = Json::object();
  cert["checks"] = Json::array();
  cert["matrices"] = Json::object();
  return cert;
}

void add_verdict(Json& cert, const std::string& name, bool passed, const std::string& detail = {}) {
  cert["verdicts"][name] = passed;
  cert["checks"].push_back({{"axiom", name}, {"passed", passed}, {"detail", detail}});
}

void add_report(Json& cert, const Report& report, const std::string& prefix) {
  for (const auto& item : report.items()) add_verdict(cert, prefix + item.axiom, item.passed, item.detail);
}

bool all_verdicts(const Json& cert) {
  for (const auto& [name, value] : cert["verdicts"].items()) {
    if (!value.get<bool>()) return false;
  }
  return true;
}

Json& finish(Json& cert) {
  const bool ok = all_verdicts(cert);
  cert["status"] = ok ? "pass" : "axiom-failure";
  cert["exit_code"] = ok ? kExitPass : kExitAxiomFailure;
  return cert;
}

/// Embedded matrix of a certificate being replayed; nullptr when solving.
std::optional<Matrix> supplied_matrix(const Json* replay, const std::string& name) {
  if (replay == nullptr) return std::nullopt;
  const Json& matrices = require_field(*replay, "matrices", "");
  if (!matrices.contains(name)) throw MalformedInput("/matrices/" + name + ": missing field");
  return matrix_from_json(matrices[name], "/matrices/" + name);
}

std::size_t scenario_size(const Json& s, const std::string& key) { return size_from_json(require_field(s, key, ""), "/" + key); }

std::size_t chain_resolution(const Json& s, const std::string& key) {
  const std::size_t m = scenario_size(s, key);
  if (m == 0) throw MalformedInput("/" + key + ": chain resolution must be at least 1");
  return m;
}

std::string operation_of(const Json& s, const std::string& command) {
  if (!s.is_object()) throw MalformedInput("/: expected a scenario object");
  if (s.contains("kind") && s["kind"] != "scenario") throw MalformedInput("/kind: expected \"scenario\"");
  if (s.contains("command") && s["command"] != command) {
    throw MalformedInput("/command: scenario is for '" + s["command"].dump() + "', not '" + command + "'");
  }
  return string_from_json(require_field(s, "operation", ""), "/operation");
}

std::vector<Scalar> profile_of(const Json& s) {
  const Json& p = require_field(s, "profile", "");
  std::vector<Scalar> out;
  if (p.is_string()) {
    std::stringstream in(p.get<std::string>());
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_scalar(item));
    return out;
  }
  return vector_from_json(p, "/profile");
}

FiniteGSet gset_of(const Json& s) {
  if (s.contains("gset")) return gset_from_json(s["gset"], "/gset");
  return FiniteGSet::regular(group_from_json(require_field(s, "group", ""), "/group"));
}

Json dims_json(const Subspace& s) { return Json{{"dim", s.dim()}, {"ambient", s.ambient_dim()}}; }

// --- check ----------------------------------------------------------------

Json check_impl(const Json& doc) {
  Json cert = new_certificate("check", doc);
  const std::string kind = string_from_json(require_field(doc, "kind", ""), "/kind");
  cert["results"]["kind"] = kind;
  if (kind == "algebra") {
    const Algebra a = algebra_from_json(doc, "");
    add_report(cert, check_algebra(a), "");
    cert["results"]["dim"] = a.dim();
    cert["results"]["commutative"] = a.is_commutative();
  } else if (kind == "hopf") {
    const HopfAlgebra h = hopf_from_json(doc, "");
    add_report(cert, check_hopf(h), "");
    cert["results"]["dim"] = h.dim();
  } else if (kind == "comodule") {
    const ComoduleAlgebra pa = comodule_from_json(doc, "");
    add_report(cert, check_hopf(pa.hopf), "hopf.");
    add_report(cert, check_algebra(pa.algebra), "algebra.");
    add_report(cert, check_comodule(pa), "");
    cert["results"]["dim_p"] = pa.dim_p();
    cert["results"]["dim_h"] = pa.dim_h();
  } else if (kind == "group") {
    const FiniteGroup g = group_from_json(doc.contains("table") || doc.contains("name") ? doc : require_field(doc, "group", ""), "");
    add_verdict(cert, "group_axioms", true);
    cert["results"]["order"] = g.order();
    cert["results"]["abelian"] = g.is_abelian();
  } else if (kind == "gset") {
    const FiniteGSet x = gset_from_json(doc, "");
    add_verdict(cert, "action_axioms", true);
    cert["results"]["size"] = x.size();
    cert["results"]["free"] = is_free(x);
  } else {
    throw MalformedInput("/kind: cannot check documents of kind '" + kind + "'");
  }
  return finish(cert);
}

// --- solve-connection -----------------------------------------------------

Json solve_impl(const Json& doc, bool unital, const Json* replay) {
  Json cert = new_certificate("solve-connection", doc);
  cert["options"]["unital"] = unital;
  const Json& block = doc.contains("comodule") ? doc["comodule"] : doc;
  const ComoduleAlgebra pa = comodule_from_json(block, doc.contains("comodule") ? "/comodule" : "");
  const Report axioms = check_comodule(pa);
  add_report(cert, check_hopf(pa.hopf), "hopf.");
  add_report(cert, axioms, "comodule.");
  if (!all_verdicts(cert)) return finish(cert);

  const Subalgebra b = coinvariants(pa);
  const BalancedTensor balanced = balanced_tensor(pa, b);
  const CanonicalMap can = canonical_map(pa, balanced);
  cert["results"]["dim_p"] = pa.dim_p();
  cert["results"]["dim_h"] = pa.dim_h();
  cert["results"]["dim_coinvariants"] = b.subspace.dim();
  cert["results"]["dim_balanced_tensor"] = balanced.dim();
  cert["results"]["canonical_map_bijective"] = can.bijective;
  cert["matrices"]["can"] = matrix_to_json(can.matrix);
  add_verdict(cert, "canonical_map_well_defined", can.well_defined);

  bool feasible = false;
  std::optional<StrongConnection> ell;
  std::vector<Scalar> multipliers;
  if (replay == nullptr) {
    const ConnectionSolve solved = solve_strong_connection(pa, unital);
    cert["results"]["unknowns"] = solved.unknowns;
    cert["results"]["equations"] = solved.equations;
    cert["results"]["rank"] = solved.rank;
    feasible = solved.feasible;
    if (feasible) {
      ell = solved.connection;
    } else {
      multipliers = solved.infeasibility->multipliers;
      cert["results"]["inconsistent_equation"] = solved.infeasibility->inconsistent_equation;
    }
  } else {
    for (const char* key : {"unknowns", "equations", "rank", "inconsistent_equation"}) {
      if ((*replay)["results"].contains(key)) cert["results"][key] = (*replay)["results"][key];
    }
    feasible = require_field((*replay)["results"], "feasible", "/results").get<bool>();
    if (feasible) {
      ell = StrongConnection{*supplied_matrix(replay, "ell"), unital};
    } else {
      multipliers = sparse_vector_from_json(require_field((*replay)["matrices"], "multipliers", "/matrices"),
                                            "/matrices/multipliers");
    }
  }
  cert["results"]["feasible"] = feasible;

  if (feasible) {
    cert["matrices"]["ell"] = matrix_to_json(ell->ell);
    add_report(cert, check_strong_connection(pa, *ell), "connection.");
    add_verdict(cert, "hopf_galois", can.bijective, "a strong connection forces a bijective canonical map");
    const TranslationInverse inverse = translation_inverse(pa, *ell, balanced, can);
    cert["matrices"]["L"] = matrix_to_json(inverse.map);
    add_verdict(cert, "translation.can_after_translation", inverse.can_after_translation);
    add_verdict(cert, "translation.translation_after_can", inverse.translation_after_can);
    return finish(cert);
  }
  cert["matrices"]["multipliers"] = vector_to_json(multipliers);
  const bool certified = certifies_infeasibility(strong_connection_system(pa, unital), multipliers);
  add_verdict(cert, "infeasibility_certified", certified, "yᵀA = 0 and yᵀb = 1");
  if (all_verdicts(cert)) {
    cert["status"] = "infeasible";
    cert["exit_code"] = kExitInfeasible;
    return cert;
  }
  return finish(cert);
}

// --- fusion ---------------------------------------------------------------

void theorem_fields(Json& cert, const TheoremCertificate& tc) {
  add_report(cert, tc.fusion.report, "fusion.");
  add_report(cert, tc.source_report, "source.");
  add_report(cert, tc.lifted.report, "constructive.");
  add_report(cert, tc.fusion_solver_report, "solver.");
  add_verdict(cert, "solver.principal", tc.fusion_principality.principal);
  add_verdict(cert, "verdicts_agree", tc.constructive_verdict() == tc.solver_verdict());
  cert["results"]["constructive_verdict"] = tc.constructive_verdict();
  cert["results"]["solver_verdict"] = tc.solver_verdict();
  cert["results"]["verified"] = tc.verified();
  cert["results"]["carrier"] = dims_json(tc.fusion.carrier.subspace);
  cert["results"]["coinvariants"] = dims_json(coinvariants_of_fusion(tc.fusion).subspace);
  cert["matrices"]["ell"] = matrix_to_json(tc.source_connection.ell);
  cert["matrices"]["ell_tilde"] = matrix_to_json(tc.lifted.connection.ell);
  if (tc.fusion_principality.solve.connection) {
    cert["matrices"]["fusion_ell"] = matrix_to_json(tc.fusion_principality.solve.connection->ell);
  }
  cert["matrices"]["carrier"] = matrix_to_json(tc.fusion.carrier.inclusion());
  cert["matrices"]["coaction"] = matrix_to_json(tc.fusion.comodule.coaction);
}

Json fusion_impl(const Json& s, const Json* replay) {
  const std::string op = operation_of(s, "fusion");
  Json cert = new_certificate("fusion", s);
  cert["results"]["operation"] = op;

  if (op == "fusion") {
    const std::size_t m = chain_resolution(s, "m");
    const Algebra left = algebra_from_json(require_field(s, "left", ""), "/left");
    const Algebra right = algebra_from_json(require_field(s, "right", ""), "/right");
    const FusionAlgebra f = build_fusion(ChainInterval::make(m).ends, left, right);
    add_verdict(cert, "carrier_unital", f.carrier.unital);
    add_report(cert, check_algebra(f.carrier.algebra), "carrier.");
    cert["results"]["carrier"] = dims_json(f.carrier.subspace);
    cert["matrices"]["carrier"] = matrix_to_json(f.carrier.inclusion());
    return finish(cert);
  }

  const ComoduleAlgebra pa = comodule_from_json(require_field(s, "comodule", ""), "/comodule");
  if (op == "equivariant-fusion") {
    const std::size_t m = chain_resolution(s, "m");
    const EquivariantFusion ef = build_equivariant_fusion(ChainInterval::make(m).ends, pa);
    add_report(cert, ef.report, "");
    cert["results"]["carrier"] = dims_json(ef.carrier.subspace);
    if (ef.report.ok()) {
      cert["results"]["coinvariants"] = dims_json(coinvariants_of_fusion(ef).subspace);
      cert["matrices"]["coaction"] = matrix_to_json(ef.comodule.coaction);
    }
    cert["matrices"]["carrier"] = matrix_to_json(ef.carrier.inclusion());
    return finish(cert);
  }
  if (op == "theorem-main") {
    const std::size_t m = chain_resolution(s, "m");
    const ChainInterval chain = ChainInterval::make(m);
    const SqrtPair pair = make_sqrt_pair(chain, profile_of(s));
    add_report(cert, check_sqrt_pair(chain.ends, pair), "sqrt_pair.");
    if (replay == nullptr) {
      theorem_fields(cert, verify_theorem_main(chain.ends, pa, pair));
      return finish(cert);
    }
    // Replay: both connections are taken from the certificate.
    TheoremCertificate tc;
    tc.source_connection = StrongConnection{*supplied_matrix(replay, "ell"), false};
    tc.source_report = check_strong_connection(pa, tc.source_connection);
    tc.fusion = build_equivariant_fusion(chain.ends, pa);
    tc.lifted = lift_connection(tc.fusion, tc.source_connection, pair);
    const StrongConnection fusion_ell{*supplied_matrix(replay, "fusion_ell"), false};
    tc.fusion_solver_report = check_strong_connection(tc.fusion.comodule, fusion_ell);
    tc.fusion_principality.principal = tc.fusion_solver_report.ok();
    tc.fusion_principality.solve.feasible = tc.fusion_principality.principal;
    tc.fusion_principality.solve.connection = fusion_ell;
    theorem_fields(cert, tc);
    return finish(cert);
  }
  if (op == "pullback") {
    const PullbackVerdict pv = pullback_identification(chain_resolution(s, "mA"), chain_resolution(s, "mB"), pa);
    add_report(cert, pv.report, "");
    cert["results"]["fiber_product"] = dims_json(pv.fiber_product);
    cert["results"]["carrier"] = dims_json(pv.glued.carrier.subspace);
    cert["matrices"]["gluing"] = matrix_to_json(pv.gluing);
    cert["matrices"]["isomorphism"] = matrix_to_json(pv.isomorphism);
    return finish(cert);
  }
  throw MalformedInput("/operation: unknown fusion operation '" + op + "'");
}

// --- classical ------------------------------------------------------------

Json classical_impl(const Json& s, const Json* replay) {
  const std::string op = operation_of(s, "classical");
  Json cert = new_certificate("classical", s);
  cert["results"]["operation"] = op;

  if (op == "is-free") {
    const FiniteGSet x = gset_of(s);
    const bool free = is_free(x);
    const ComoduleAlgebra pa = fun_comodule(x);
    const CanonicalMap can = canonical_map(pa, balanced_tensor(pa, coinvariants(pa)));
    cert["results"]["free"] = free;
    cert["results"]["canonical_map_bijective"] = can.bijective;
    add_verdict(cert, "freeness_matches_hopf_galois", free == can.bijective);
    cert["matrices"]["can"] = matrix_to_json(can.matrix);
    return finish(cert);
  }
  if (op == "discrete-join") {
    const std::size_t nx = scenario_size(s, "left_size"), ny = scenario_size(s, "right_size");
    const std::size_t m = chain_resolution(s, "m");
    const PointClasses pc = discrete_join(nx, ny, m);
    cert["results"]["points"] = pc.classes;
    add_verdict(cert, "point_count_formula", pc.classes == ny + (m - 1) * nx * ny + nx);
    cert["results"]["class_of"] = pc.class_of;
    return finish(cert);
  }
  if (op == "gauged-join-iso") {
    const JoinMapCheck jc = gauged_join_iso(gset_of(s), chain_resolution(s, "m"));
    add_verdict(cert, "well_defined", jc.well_defined);
    add_verdict(cert, "bijective", jc.bijective);
    add_verdict(cert, "equivariant", jc.equivariant);
    cert["results"]["join_points"] = jc.join.classes;
    cert["results"]["gauged_points"] = jc.gauged.classes;
    cert["results"]["class_map"] = jc.class_map;
    return finish(cert);
  }
  if (op == "fun-of-join-vs-fusion") {
    const JoinFusionCheck jf = fun_of_join_vs_fusion(scenario_size(s, "left_size"), scenario_size(s, "right_size"),
                                                     chain_resolution(s, "m"));
    add_report(cert, jf.report, "");
    cert["results"]["points"] = jf.join.classes;
    cert["results"]["carrier"] = dims_json(jf.fusion.carrier.subspace);
    cert["matrices"]["isomorphism"] = matrix_to_json(jf.isomorphism);
    return finish(cert);
  }
  if (op == "diagonal-join-freeness") {
    const FiniteGSet x = gset_of(s);
    const std::size_t m = chain_resolution(s, "m");
    const DiagonalFreeness df = replay == nullptr
                                    ? diagonal_join_freeness(x, m)
                                    : diagonal_join_freeness(x, m, StrongConnection{*supplied_matrix(replay, "fusion_ell"), false});
    add_verdict(cert, "action_free", df.action_free);
    add_verdict(cert, "fusion_principal", df.fusion_principality.principal);
    cert["results"]["gauged_points"] = df.gauged.classes;
    if (df.fusion_principality.solve.connection) {
      cert["matrices"]["fusion_ell"] = matrix_to_json(df.fusion_principality.solve.connection->ell);
    }
    return finish(cert);
  }
  throw MalformedInput("/operation: unknown classical operation '" + op + "'");
}

}  // namespace

Json run_check(const Json& document) { return check_impl(document); }
Json run_solve_connection(const Json& document, bool require_unital) { return solve_impl(document, require_unital, nullptr); }
Json run_fusion(const Json& scenario) { return fusion_impl(scenario, nullptr); }
Json run_classical(const Json& scenario) { return classical_impl(scenario, nullptr); }

Json replay_certificate(const Json& certificate) {
  const std::string command = string_from_json(require_field(certificate, "command", ""), "/command");
  const Json& input = require_field(certificate, "input", "");
  Json again;
  if (command == "check") {
    again = check_impl(input);
  } else if (command == "solve-connection") {
    const Json& options = require_field(certificate, "options", "");
    again = solve_impl(input, options.value("unital", false), &certificate);
  } else if (command == "fusion") {
    again = fusion_impl(input, &certificate);
  } else if (command == "classical") {
    again = classical_impl(input, &certificate);
  } else {
    throw MalformedInput("/command: unknown command '" + command + "'");
  }

  Json mismatches = Json::array();
  const Json& recorded = require_field(certificate, "verdicts", "");
  for (const auto& [name, value] : recorded.items()) {
    if (!again["verdicts"].contains(name) || again["verdicts"][name] != value) mismatches.push_back(name);
  }
  for (const auto& [name, value] : again["verdicts"].items()) {
    if (!recorded.contains(name)) mismatches.push_back(name);
  }
  if (again["results"] != require_field(certificate, "results", "")) mismatches.push_back("results");
  if (again["matrices"] != require_field(certificate, "matrices", "")) mismatches.push_back("matrices");
  if (again["exit_code"] != require_field(certificate, "exit_code", "")) mismatches.push_back("exit_code");
  return Json{{"command", command},
              {"scenario", again["scenario"]},
              {"reproduced", mismatches.empty()},
              {"mismatches", mismatches},
              {"verdicts", again["verdicts"]},
              {"status", again["status"]}};
}

void stamp_timing(Json& certificate, double seconds) { certificate["timing"] = {{"seconds", seconds}}; }

Json without_timing(const Json& certificate) {
  Json out = certificate;
  out.erase("timing");
  return out;
}

int exit_code_of(const Json& certificate) { return certificate.value("exit_code", static_cast<int>(kExitAxiomFailure)); }

std::string render_text(const Json& cert) {
  std::ostringstream out;
  if (cert.contains("reproduced")) {
    out << "replay " << cert["command"].get<std::string>() << ": "
        << (cert["reproduced"].get<bool>() ? "all verdicts reproduced" : "MISMATCH") << "\n";
    for (const auto& name : cert["mismatches"]) out << "  differs: " << name.get<std::string>() << "\n";
    return out.str();
  }
  out << "joinalg " << cert["tool"]["version"].get<std::string>() << " " << cert["command"].get<std::string>();
  if (!cert["scenario"].get<std::string>().empty()) out << " [" << cert["scenario"].get<std::string>() << "]";
  out << "\nstatus: " << cert["status"].get<std::string>() << " (exit " << cert["exit_code"].get<int>() << ")\n";
  std::size_t held = 0;
  for (const auto& item : cert["checks"]) held += item["passed"].get<bool>() ? 1 : 0;
  out << "checks: " << held << "/" << cert["checks"].size() << " hold\n";
  for (const auto& item : cert["checks"]) {
    if (item["passed"].get<bool>()) continue;
    out << "  FAILED " << item["axiom"].get<std::string>();
    if (!item["detail"].get<std::string>().empty()) out << ": " << item["detail"].get<std::string>();
    out << "\n";
  }
  for (const auto& [key, value] : cert["results"].items()) {
    if (value.is_array()) continue;
    out << "  " << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
  for (const auto& [key, value] : cert["matrices"].items()) {
    if (value.contains("rows")) {
      out << "  matrix " << key << ": " << value["rows"] << "x" << value["cols"] << ", " << value["entries"].size()
          << " nonzeros\n";
    } else {
      out << "  vector " << key << ": size " << value["size"] << ", " << value["entries"].size() << " nonzeros\n";
    }
  }
  if (cert.contains("timing")) out << "time: " << cert["timing"]["seconds"].get<double>() << " s\n";
  return out.str();
}

}  // namespace joinalg
