#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "joinalg/certificate.hpp"
#include "oracles.hpp"

using namespace joinalg;

namespace {

std::string malformed_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const MalformedInput& e) {
    return e.what();
  }
  return {};
}

Json theorem_scenario(const char* middle) {
  return Json{{"kind", "scenario"},
              {"id", "t"},
              {"operation", "theorem-main"},
              {"comodule", {{"gset", {{"group", "Z/2"}, {"builder", "regular"}}}}},
              {"m", 2},
              {"profile", {"0", middle, "1"}}};
}

}  // namespace

TEST(Io, MatrixFormats) {
  const Matrix dense = matrix_from_json(Json::parse(R"([["1", "0"], [2, "-1/3"]])"), "/m");
  const Matrix sparse = matrix_from_json(
      Json::parse(R"({"rows": 2, "cols": 2, "entries": [[0, 0, "1"], [1, 0, "2"], [1, 1, "-2/6"]]})"), "/m");
  EXPECT_EQ(dense, sparse);
  EXPECT_EQ(matrix_from_json(matrix_to_json(dense), ""), dense);
  EXPECT_EQ(matrix_to_json(dense)["entries"].size(), 3u);
}

TEST(Io, RoundTripRandomMatrices) {
  std::mt19937 rng(11);
  for (int i = 0; i < 20; ++i) {
    const Matrix m = oracle::random_matrix(rng, 1 + i % 5, 1 + i % 3);
    EXPECT_EQ(matrix_from_json(Json::parse(matrix_to_json(m).dump()), ""), m);
  }
  const std::vector<Scalar> v = {0, Scalar(1, 3), 0, -2};
  EXPECT_EQ(sparse_vector_from_json(vector_to_json(v), ""), v);
}

TEST(Io, Diagnostics) {
  EXPECT_NE(malformed_message([] { matrix_from_json(Json::parse(R"([["1"], ["1", "2"]])"), "/hopf/antipode"); })
                .find("/hopf/antipode/1"),
            std::string::npos);
  EXPECT_NE(malformed_message([] {
              matrix_from_json(Json::parse(R"({"rows": 1, "cols": 1, "entries": [[0, 3, "1"]]})"), "/x");
            }).find("/x/entries/0"),
            std::string::npos);
  EXPECT_NE(malformed_message([] { scalar_from_json(Json("1/0"), "/unit/0"); }).find("/unit/0"), std::string::npos);
  EXPECT_NE(malformed_message([] { parse_json_text("{\n  \"a\": [1,\n", "f.json"); }).find("f.json:3:"),
            std::string::npos);
  EXPECT_NE(malformed_message([] { algebra_from_json(Json::parse(R"({"basis": ["a"], "unit": ["1"]})"), ""); })
                .find("/constants"),
            std::string::npos);
  EXPECT_FALSE(malformed_message([] { group_from_json(Json::parse(R"({"table": [[0, 1], [0, 1]]})"), "/g"); }).empty());
  EXPECT_FALSE(malformed_message([] {
                 gset_from_json(Json::parse(R"({"group": "Z/2", "action": [[1, 0], [0, 1]]})"), "/x");
               }).empty());
}

TEST(Io, HopfAndComoduleDocuments) {
  const HopfAlgebra built = hopf_from_json(Json::parse(R"({"builder": "function", "group": "S3"})"), "");
  EXPECT_TRUE(check_hopf(built).ok());
  Json explicit_doc = {{"algebra", algebra_to_json(built.algebra)},
                       {"coproduct", matrix_to_json(built.coproduct)},
                       {"counit", matrix_to_json(built.counit)},
                       {"antipode", matrix_to_json(built.antipode)}};
  const HopfAlgebra parsed = hopf_from_json(explicit_doc, "");
  EXPECT_EQ(parsed.coproduct, built.coproduct);
  EXPECT_EQ(parsed.antipode_inverse, built.antipode_inverse);
  EXPECT_TRUE(check_hopf(parsed).ok());

  const ComoduleAlgebra pa = comodule_from_json(
      Json::parse(R"({"gset": {"union": [{"group": "Z/2", "builder": "regular"},
                                          {"group": "Z/2", "action": [[0, 1], [1, 0]]}]}})"),
      "");
  EXPECT_EQ(pa.dim_p(), 4u);
  EXPECT_TRUE(check_comodule(pa).ok());
}

TEST(Io, FileReferencesAreInlined) {
  const auto dir = std::filesystem::temp_directory_path() / "joinalg_io_test";
  std::filesystem::create_directories(dir / "sub");
  std::ofstream(dir / "sub" / "g.json") << R"({"group": "Z/3", "builder": "regular"})";
  std::ofstream(dir / "sub" / "c.json") << R"({"gset": {"file": "g.json"}})";
  std::ofstream(dir / "top.json") << R"({"kind": "comodule", "comodule": {"file": "sub/c.json"}})";
  const Json doc = load_document(dir / "top.json");
  EXPECT_EQ(doc["comodule"]["gset"]["group"], "Z/3");
  EXPECT_THROW(load_document(dir / "missing.json"), MalformedInput);
  std::filesystem::remove_all(dir);
}

TEST(Certificate, DeterministicAndReplayable) {
  const Json a = run_fusion(theorem_scenario("3/5"));
  const Json b = run_fusion(theorem_scenario("3/5"));
  EXPECT_EQ(without_timing(a).dump(), without_timing(b).dump());
  EXPECT_EQ(exit_code_of(a), kExitPass);
  const Json replay = replay_certificate(Json::parse(a.dump()));
  EXPECT_TRUE(replay["reproduced"].get<bool>()) << replay.dump();

  Json stamped = a;
  stamp_timing(stamped, 1.5);
  EXPECT_EQ(without_timing(stamped).dump(), without_timing(a).dump());
}

TEST(Certificate, ReplayCatchesTampering) {
  Json cert = run_fusion(theorem_scenario("4/5"));
  Json flipped = cert;
  flipped["verdicts"]["constructive.lifted.splitting"] = false;
  EXPECT_FALSE(replay_certificate(flipped)["reproduced"].get<bool>());

  Json bent = cert;
  auto& entries = bent["matrices"]["fusion_ell"]["entries"];
  entries[0][2] = "7";
  const Json r = replay_certificate(bent);
  EXPECT_FALSE(r["reproduced"].get<bool>());
}

TEST(Certificate, InfeasibleReplay) {
  const Json doc = Json::parse(R"({"kind": "comodule", "gset": {"group": "Z/2", "builder": "trivial", "size": 1}})");
  const Json cert = run_solve_connection(doc, false);
  EXPECT_EQ(exit_code_of(cert), kExitInfeasible);
  EXPECT_TRUE(replay_certificate(cert)["reproduced"].get<bool>());
  Json bad = cert;
  bad["matrices"]["multipliers"]["entries"] = Json::array();
  EXPECT_FALSE(replay_certificate(bad)["reproduced"].get<bool>());
}

TEST(Certificate, ClassicalOperations) {
  const Json join = run_classical(Json::parse(
      R"({"operation": "fun-of-join-vs-fusion", "left_size": 2, "right_size": 3, "m": 2})"));
  EXPECT_EQ(exit_code_of(join), kExitPass);
  EXPECT_EQ(join["results"]["points"], 3 + 6 + 2);
  for (const char* op : {"is-free", "gauged-join-iso", "diagonal-join-freeness"}) {
    Json s = {{"operation", op}, {"group", "Z/3"}, {"m", 2}};
    const Json c = run_classical(s);
    EXPECT_EQ(exit_code_of(c), kExitPass) << op;
    EXPECT_TRUE(replay_certificate(c)["reproduced"].get<bool>()) << op;
  }
  EXPECT_THROW(run_classical(Json::parse(R"({"operation": "diagonal-join-freeness",
      "gset": {"group": "Z/2", "builder": "trivial", "size": 1}, "m": 2})")),
               PreconditionFailed);
  EXPECT_THROW(run_classical(Json::parse(R"({"operation": "nope"})")), MalformedInput);
  EXPECT_THROW(run_fusion(Json::parse(R"({"command": "classical", "operation": "pullback"})")), MalformedInput);
}

TEST(Certificate, CheckReportsFailingAxiom) {
  Json doc = {{"kind", "algebra"}, {"basis", {"a", "b"}}, {"unit", {"1", "1"}},
              {"constants", Json::array({Json::array({0, 0, 0, "1"}), Json::array({1, 1, 0, "1"})})}};
  const Json cert = run_check(doc);
  EXPECT_EQ(exit_code_of(cert), kExitAxiomFailure);
  EXPECT_FALSE(render_text(cert).empty());
}
