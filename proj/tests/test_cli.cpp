#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "qpres/errors.hpp"
#include "qpres/runner.hpp"

using namespace qpres;
using nlohmann::ordered_json;

namespace {

RunConfig base(const std::string& algebra) {
  RunConfig cfg;
  cfg.algebra_arg = algebra;
  return cfg;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("integer list parsing") {
  CHECK(parse_int_list("1,-2,3", "weight") == std::vector<int>{1, -2, 3});
  CHECK(parse_int_list("7", "weight") == std::vector<int>{7});
  CHECK_THROWS_AS(parse_int_list("", "weight"), ValidationError);
  CHECK_THROWS_AS(parse_int_list("1,,2", "weight"), ValidationError);
  CHECK_THROWS_AS(parse_int_list("1,x", "weight"), ValidationError);
  CHECK_THROWS_AS(parse_int_list("1.5", "weight"), ValidationError);
}

TEST_CASE("hom command and the JSON envelope") {
  RunConfig cfg = base("builtin:a2");
  cfg.weight = "1,-1";
  cfg.module_name = "S2";
  RunResult rr = run_command("hom", cfg);
  CHECK(rr.exit_code == 0);
  CHECK(rr.output.find("hom: 0") != std::string::npos);
  CHECK(rr.output.find("e: 1") != std::string::npos);

  cfg.json = true;
  rr = run_command("hom", cfg);
  REQUIRE(rr.exit_code == 0);
  ordered_json j = ordered_json::parse(rr.output);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"command", "algebra_hash", "seed",
                                         "samples", "results"});
  CHECK(j["command"] == "hom");
  CHECK(j["samples"] == 16);
  CHECK(j["results"]["hom"] == 0);
  CHECK(j["results"]["e"] == 1);
}

TEST_CASE("canonical decomposition command") {
  RunConfig cfg = base("builtin:a2");
  cfg.weight = "2,-1";
  cfg.json = true;
  RunResult rr = run_command("candecomp", cfg);
  REQUIRE(rr.exit_code == 0);
  ordered_json j = ordered_json::parse(rr.output);
  ordered_json want = ordered_json::array({{1, -1}, {1, 0}});
  CHECK(j["results"]["summands"] == want);
  CHECK(j["results"]["agree"][1] == 16);
}

TEST_CASE("classify command and its indecomposability guard") {
  RunConfig cfg = base("builtin:k3");
  cfg.weight = "1,-2";
  RunResult rr = run_command("classify", cfg);
  CHECK(rr.exit_code == 0);
  CHECK(rr.output.find("tag: wild") != std::string::npos);

  cfg = base("builtin:a2");
  cfg.weight = "1,1";
  rr = run_command("classify", cfg);
  CHECK(rr.exit_code == 2);
  CHECK(rr.output.find("not indecomposable") != std::string::npos);
}

TEST_CASE("membership needs an enumerable field") {
  RunConfig cfg = base("builtin:a2");
  cfg.field_override = 2;
  cfg.weight = "1,-1";
  cfg.module_name = "S1";
  RunResult rr = run_command("membership", cfg);
  CHECK(rr.exit_code == 0);
  CHECK(rr.output.find("in_t: true") != std::string::npos);
  CHECK(rr.output.find("in_tbar: true") != std::string::npos);
  CHECK(rr.output.find("in_fbar: false") != std::string::npos);

  cfg.field_override = 0;  // builtin default field is far beyond the cap
  cfg.module_name = "coker:3,-3:5";
  rr = run_command("membership", cfg);
  CHECK(rr.exit_code == 2);
  CHECK(rr.output.find("enumeration cap") != std::string::npos);
}

TEST_CASE("cokernel sampling is seed-deterministic") {
  RunConfig cfg = base("builtin:a2");
  cfg.weight = "2,-1";
  cfg.seed = 5;
  cfg.json = true;
  RunResult rr = run_command("coker", cfg);
  REQUIRE(rr.exit_code == 0);
  ordered_json j = ordered_json::parse(rr.output);
  CHECK(j["results"]["neg"] == ordered_json::array({0, 1}));
  CHECK(j["results"]["pos"] == ordered_json::array({2, 0}));
  CHECK(j["results"]["dims"] == ordered_json::array({2, 1}));
  CHECK(run_command("coker", cfg).output == rr.output);
}

TEST_CASE("generic pair e vanishes on the tame fixture") {
  RunConfig cfg = base("builtin:a2");
  cfg.weight = "1,-1";
  cfg.eta = "1,-1";
  RunResult rr = run_command("epair", cfg);
  CHECK(rr.exit_code == 0);
  CHECK(rr.output.find("e: 0") != std::string::npos);
}

TEST_CASE("tropical values of a named module") {
  RunConfig cfg = base("builtin:a2");
  cfg.field_override = 2;
  cfg.module_name = "P1";
  cfg.weight = "1,-1";
  cfg.json = true;
  RunResult rr = run_command("fpoly", cfg);
  REQUIRE(rr.exit_code == 0);
  ordered_json j = ordered_json::parse(rr.output);
  CHECK(j["results"]["submodule_count"] == 3);
  CHECK(j["results"]["f_value"] == 0);
  CHECK(j["results"]["t_value"] == 0);
  CHECK(j["results"]["pairing"] == 0);
}

TEST_CASE("closure flag comparison finds the first disagreeing module") {
  RunConfig cfg = base("builtin:a2");
  cfg.field_override = 2;
  cfg.dim_cap = {3, 3};
  cfg.exhaustive = true;
  cfg.weight = "1,-1";
  cfg.eta = "-1,1";
  cfg.json = true;
  RunResult rr = run_command("tfcheck", cfg);
  REQUIRE(rr.exit_code == 0);
  ordered_json j = ordered_json::parse(rr.output);
  CHECK(j["results"]["modules"] == 29);
  CHECK(j["results"]["equivalent"] == false);
  CHECK(j["results"]["module"] == "S1");
  CHECK(j["results"]["flag"] == "tbar");
}

TEST_CASE("canonical summand weights of a weight") {
  RunConfig cfg = base("builtin:a2");
  cfg.weight = "2,-1";
  cfg.json = true;
  RunResult rr = run_command("indset", cfg);
  REQUIRE(rr.exit_code == 0);
  ordered_json j = ordered_json::parse(rr.output);
  CHECK(j["results"]["weights"] == ordered_json::array({{1, -1}, {1, 0}}));
}

TEST_CASE("testset census through the command layer") {
  RunConfig cfg = base("builtin:a2");
  cfg.field_override = 2;
  cfg.dim_cap = {2, 2};
  cfg.exhaustive = true;
  cfg.json = true;
  RunResult rr = run_command("testset", cfg);
  REQUIRE(rr.exit_code == 0);
  ordered_json j = ordered_json::parse(rr.output);
  CHECK(j["results"]["count"] == 13);
  CHECK(j["results"]["modules"][0]["name"] == "S1");
}

TEST_CASE("verify propagates harness failure as exit one") {
  RunConfig cfg = base("builtin:a2");
  cfg.harness_arg = "synthetic_fail";
  cfg.json = true;
  RunResult rr = run_command("verify", cfg);
  CHECK(rr.exit_code == 1);
  ordered_json j = ordered_json::parse(rr.output);
  CHECK(j["results"]["harness"] == "synthetic_fail");
  CHECK(j["results"]["pass"] == false);
  CHECK(j["results"]["cases_fail"] == 1);

  cfg.harness_arg = "duality";
  rr = run_command("verify", cfg);
  CHECK(rr.exit_code == 0);
  j = ordered_json::parse(rr.output);
  CHECK(j["results"]["pass"] == true);
  CHECK(j["results"]["cases_pass"] == 29);
}

TEST_CASE("identical config gives identical bytes, threads aside") {
  RunConfig cfg = base("builtin:a2");
  cfg.harness_arg = "closure";
  cfg.seed = 42;
  cfg.json = true;
  cfg.threads = 1;
  std::string one = run_command("verify", cfg).output;
  cfg.threads = 2;
  std::string two = run_command("verify", cfg).output;
  CHECK(one == two);
}

TEST_CASE("input errors exit with code two") {
  RunConfig cfg = base("builtin:a2");
  CHECK(run_command("bogus", cfg).exit_code == 2);

  cfg = base("");
  cfg.weight = "1,-1";
  CHECK(run_command("classify", cfg).exit_code == 2);

  cfg = base("builtin:d4");
  cfg.weight = "1,-1";
  CHECK(run_command("classify", cfg).exit_code == 2);

  cfg = base("builtin:a2");
  CHECK(run_command("classify", cfg).exit_code == 2);  // missing weight
  cfg.weight = "1,2,3";
  CHECK(run_command("classify", cfg).exit_code == 2);  // arity mismatch
  cfg.weight = "1,-1";
  cfg.samples = 0;
  CHECK(run_command("classify", cfg).exit_code == 2);

  cfg = base("builtin:a2");
  RunResult rr = run_command("verify", cfg);  // missing harness name
  CHECK(rr.exit_code == 2);

  cfg.harness_arg = "duality";
  cfg.json = true;
  cfg.algebra_arg = "";
  rr = run_command("verify", cfg);
  CHECK(rr.exit_code == 2);
  ordered_json j = ordered_json::parse(rr.output);
  CHECK(j.contains("error"));

  cfg = base("builtin:a2");
  cfg.module_name = "Q1";
  CHECK(run_command("fpoly", cfg).exit_code == 2);
  cfg.module_name = "S9";
  CHECK(run_command("fpoly", cfg).exit_code == 2);
  cfg.module_name = "coker:1,-1:zzz";
  CHECK(run_command("fpoly", cfg).exit_code == 2);
}

TEST_SUITE_END();
