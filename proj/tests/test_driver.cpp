#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>

#include "superschur/driver.hpp"

using namespace superschur;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir() {
  static std::mt19937_64 rng(std::random_device{}());
  fs::path p = fs::temp_directory_path() / ("superschur_test_" + std::to_string(rng()));
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("symmetrize command round-trips through JSON") {
  RunConfig cfg;
  cfg.m = 1;
  cfg.n = 1;

  json word = json::array({json{{"coeff", "1"}, {"monomial", json::array({{1, 1}, {1, 1}})}}});
  json fwd = run_symmetrize(cfg, word, "forward");
  REQUIRE(fwd.size() == 2);
  CHECK(fwd[0] == json{{"coeff", "1"}, {"monomial", json::array({{1, 1}})}});
  CHECK(fwd[1] == json{{"coeff", "1"}, {"monomial", json::array({{1, 1}, {1, 1}})}});

  json back = run_symmetrize(cfg, fwd, "inverse");
  CHECK(back == word);

  json vanishing =
      json::array({json{{"coeff", "1"}, {"monomial", json::array({{1, 2}, {1, 2}})}}});
  CHECK(run_symmetrize(cfg, vanishing, "forward") == json::array());
}

TEST_CASE("symmetrize command rejects bad input with diagnostics") {
  RunConfig cfg;
  cfg.m = 1;
  cfg.n = 1;

  CHECK_THROWS_AS(run_symmetrize(cfg, json::array(), "sideways"), ConfigError);

  json out_of_range =
      json::array({json{{"coeff", "1"}, {"monomial", json::array({{1, 3}})}}});
  CHECK_THROWS_AS(run_symmetrize(cfg, out_of_range, "forward"), std::out_of_range);

  json unsorted = json::array(
      {json{{"coeff", "1"}, {"monomial", json::array({{2, 1}, {1, 2}})}}});
  CHECK_THROWS_WITH(run_symmetrize(cfg, unsorted, "inverse"),
                    Catch::Matchers::ContainsSubstring("canonical order"));

  json odd_square = json::array(
      {json{{"coeff", "1"}, {"monomial", json::array({{1, 2}, {1, 2}})}}});
  CHECK_THROWS_WITH(run_symmetrize(cfg, odd_square, "inverse"),
                    Catch::Matchers::ContainsSubstring("odd"));
}

TEST_CASE("verify command: exit codes and reports") {
  RunConfig cfg;
  cfg.suite = "gl-class-sums";
  cfg.m = 1;
  cfg.n = 1;
  cfg.N = 2;

  json report;
  CHECK(run_verify(cfg, &report) == 0);
  CHECK(report["pass"] == true);
  CHECK(report["results"].size() == 3);  // (1), (2), (1,1)
  for (const auto& r : report["results"]) {
    CHECK(r["pass"] == true);
    CHECK(r["lhs_hash"] == r["rhs_hash"]);
  }

  RunConfig bad = cfg;
  bad.perturb = "drop-cycle-sign";
  json bad_report;
  CHECK(run_verify(bad, &bad_report) == 1);
  CHECK(bad_report["pass"] == false);

  RunConfig overlong = cfg;
  overlong.rho = IntegerPartition{{3}};
  CHECK_THROWS_AS(run_verify(overlong), ConfigError);
  overlong.allow_overlong_rho = true;
  json exp_report;
  run_verify(overlong, &exp_report);  // empty-sum experiment, outcome recorded
  CHECK(exp_report["results"].size() == 1);

  RunConfig unknown = cfg;
  unknown.suite = "nope";
  CHECK_THROWS_AS(run_verify(unknown), ConfigError);
  RunConfig badperturb = cfg;
  badperturb.perturb = "flip-everything";
  CHECK_THROWS_AS(run_verify(badperturb), ConfigError);
}

TEST_CASE("verify command: q suite defaults m to n") {
  RunConfig cfg;
  cfg.suite = "q-class-sums";
  cfg.n = 1;
  cfg.N = 1;
  json report;
  CHECK(run_verify(cfg, &report) == 0);

  RunConfig mismatch = cfg;
  mismatch.m = 2;
  CHECK_THROWS_AS(run_verify(mismatch), ConfigError);
}

TEST_CASE("verify reports are cached and byte-stable") {
  auto dir = fresh_dir();
  RunConfig cfg;
  cfg.suite = "q-class-sums";
  cfg.n = 1;
  cfg.N = 2;
  cfg.cache_dir = (dir / "cache").string();
  cfg.out = (dir / "report.json").string();

  json fresh;
  CHECK(run_verify(cfg, &fresh) == 0);
  std::string first_bytes = slurp(cfg.out);

  json cached;
  CHECK(run_verify(cfg, &cached) == 0);
  std::string second_bytes = slurp(cfg.out);

  CHECK(fresh == cached);
  CHECK(first_bytes == second_bytes);
  CHECK_FALSE(first_bytes.empty());

  fs::remove_all(dir);
}

TEST_CASE("duality suite reports dimensions") {
  RunConfig cfg;
  cfg.suite = "duality";
  cfg.m = 1;
  cfg.n = 1;
  cfg.N = 2;
  json report;
  CHECK(run_verify(cfg, &report) == 0);
  REQUIRE(report["results"].size() == 2);  // symmetric and sergeev at m == n
  CHECK(report["results"][0]["which"] == "symmetric");
  CHECK(report["results"][1]["which"] == "sergeev");
  CHECK(report["results"][0]["dims"]["group_span"] == 2);
}

TEST_CASE("dump-central emits deterministic canonical tables") {
  RunConfig cfg;
  cfg.m = 1;
  cfg.n = 1;
  cfg.N = 2;

  json first = run_dump_central(cfg);
  json second = run_dump_central(cfg);
  CHECK(first.dump() == second.dump());

  REQUIRE(first["tables"].size() == 3);
  const auto& t1 = first["tables"][0];  // rho = (1)
  CHECK(t1["rho"] == json::array({1}));
  CHECK(t1["I_rho"].size() == 2);  // E_11 + E_22
  CHECK(t1["a_rho"].size() == 1);
  CHECK(t1["a_rho"][0]["coeff"] == "2");  // N copies of the identity
  CHECK(t1["J_rho"] == json::array({json{{"coeff", "2"}, {"monomial", json::array({{1, 1}})}},
                                    json{{"coeff", "2"}, {"monomial", json::array({{2, 2}})}}}));

  RunConfig cfg3;
  cfg3.m = 1;
  cfg3.n = 1;
  cfg3.N = 3;
  cfg3.rho = IntegerPartition{{2}};
  json dump3 = run_dump_central(cfg3);
  REQUIRE(dump3["tables"].size() == 1);
  CHECK(dump3["tables"][0]["a_rho"].size() == 3);  // three transpositions
  for (const auto& term : dump3["tables"][0]["a_rho"]) CHECK(term["coeff"] == "2");
}

TEST_CASE("matrices serialize as index-sequence triplets") {
  SpaceSpec s(1, 1);
  ExactMatrix m = matrix_of_unit(s, 2, MatrixUnit{2, 1});
  json j = matrix_to_json(s, 2, m);
  REQUIRE(j.is_array());
  REQUIRE(!j.empty());
  for (const auto& triplet : j) {
    REQUIRE(triplet.contains("row"));
    REQUIRE(triplet.contains("col"));
    REQUIRE(triplet.contains("value"));
    CHECK(triplet["row"].size() == 2);
    CHECK(triplet["col"].size() == 2);
    CHECK(triplet["value"].is_string());
  }
  // gamma(E_21) maps e_1 x e_1 to e_2 x e_1 + e_1 x e_2 with plus signs
  CHECK(j[0] == json{{"row", {1, 2}}, {"col", {1, 1}}, {"value", "1"}});

  // rational values print as fractions
  ExactMatrix half(2);
  half.set(0, 1, Rat(1, 2));
  CHECK(matrix_to_json(s, 1, half)[0]["value"] == "1/2");
}

TEST_CASE("negative controls drive verify to exit 1") {
  auto res = check_negative_controls();
  CHECK(res.pass);
}
