#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "entcat/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using entcat::cli::run;

namespace {

struct cli_result {
  int code = -1;
  std::string out;
  std::string err;
};

cli_result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream file(std::string(ENTCAT_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(file.good(), "missing golden file ", name);
  std::ostringstream content;
  content << file.rdbuf();
  return content.str();
}

/// Verdict columns (useful_oracle, useful_theorem, agree) of CSV output.
std::vector<std::string> verdict_columns(const std::string& csv) {
  std::vector<std::string> verdicts;
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    const auto first = line.find(',');
    const auto second = line.find(',', first + 1);
    const auto third = line.find(',', second + 1);
    const auto fourth = line.find(',', third + 1);
    verdicts.push_back(line.substr(fourth + 1));
  }
  return verdicts;
}

}  // namespace

TEST_CASE("golden outputs stay stable") {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"prob", "0.6,0.2,0.2", "0.5,0.3,0.2"}, "prob_pair_b.txt"},
      {{"prob", "0.6,0.2,0.2", "0.5,0.3,0.2", "--json"}, "prob_pair_b.json"},
      {{"region2", "0.6,0.2,0.2", "0.5,0.4,0.1", "--json"}, "region2_pair_a.json"},
      {{"region2", "0.6,0.2,0.2", "0.5,0.3,0.2", "--json"}, "region2_pair_b.json"},
      {{"region2", "0.4,0.4,0.1,0.1", "0.5,0.25,0.25,0", "--json"},
       "region2_example2.json"},
      {{"construct", "0.6,0.2,0.2", "0.5,0.3,0.2", "--alpha", "801/1000", "--json"},
       "construct_pair_b_alpha801.json"},
      {{"verify", "0.6,0.2,0.2", "0.5,0.4,0.1", "0.65,0.35", "--json"},
       "verify_pair_a.json"},
      {{"exists", "0.6,0.2,0.2", "0.5,0.4,0.1"}, "exists_pair_a.txt"},
      {{"sweep", "grid", "0.6,0.2,0.2", "0.5,0.4,0.1", "--resolution", "20"},
       "sweep_grid_pair_a_res20.csv"},
  };
  for (const auto& [args, name] : cases) {
    CAPTURE(name);
    const cli_result r = invoke(args);
    CHECK(r.out == golden(name));
  }
}

TEST_CASE("exit codes") {
  CHECK(invoke({"prob", "0.6,0.2,0.2", "0.5,0.4,0.1"}).code == 0);
  // negative mathematical answers exit 1
  CHECK(invoke({"region2", "0.6,0.2,0.2", "0.5,0.4,0.1"}).code == 0);
  CHECK(invoke({"region2", "0.6,0.2,0.2", "0.5,0.3,0.2"}).code == 1);
  CHECK(invoke({"exists", "0.6,0.2,0.2", "0.6,0.2,0.2"}).code == 1);
  CHECK(invoke({"construct", "0.6,0.2,0.2", "0.6,0.2,0.2"}).code == 1);
  CHECK(invoke({"verify", "0.6,0.2,0.2", "0.5,0.4,0.1", "0.8,0.2"}).code == 1);
  CHECK(invoke({"verify", "0.6,0.2,0.2", "0.5,0.4,0.1", "0.65,0.35"}).code == 0);
  // input problems exit 2
  CHECK(invoke({"prob", "0.6,0.2", "abc"}).code == 2);
  CHECK(invoke({"prob", "0.5,0.5,-0.1", "0.5,0.5"}).code == 2);
  CHECK(invoke({"prob", "1/0", "0.5,0.5"}).code == 2);
  CHECK(invoke({"nonsense"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"sweep", "grid"}).code == 2);  // missing vectors
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("construct refuses when no catalyst exists and says why") {
  const cli_result r = invoke({"construct", "0.7,0.2,0.1", "0.4,0.3,0.3"});
  CHECK(r.code == 1);
  CHECK(r.out.find("P < min{x_n/y_n, 1}") != std::string::npos);
}

TEST_CASE("vectors are renormalized with a warning unless strict") {
  const cli_result lax = invoke({"prob", "0.6,0.2,0.2", "0.5"});
  CHECK(lax.code == 0);
  CHECK(lax.err.find("renormalizing") != std::string::npos);
  CHECK(lax.out.find("n = 3") != std::string::npos);
  CHECK(lax.out.find("P(x -> y) = 1 (1.00000)") != std::string::npos);

  const cli_result strict = invoke({"prob", "0.6,0.2,0.2", "0.5", "--strict"});
  CHECK(strict.code == 2);
  CHECK(strict.err.find("sum to exactly 1") != std::string::npos);
}

TEST_CASE("construct validates theta and alpha ranges") {
  CHECK(invoke({"construct", "0.6,0.2,0.2", "0.5,0.3,0.2", "--theta", "0"}).code == 2);
  CHECK(invoke({"construct", "0.6,0.2,0.2", "0.5,0.3,0.2", "--theta", "1"}).code == 2);
  CHECK(invoke({"construct", "0.6,0.2,0.2", "0.5,0.3,0.2", "--alpha", "0.8"}).code == 2);
  CHECK(invoke({"construct", "0.6,0.2,0.2", "0.5,0.3,0.2", "--alpha", "0.9"}).code == 0);
}

TEST_CASE("sweeps agree between backends and report zero disagreements") {
  const std::vector<std::vector<std::string>> pairs{
      {"0.6,0.2,0.2", "0.5,0.4,0.1"},
      {"0.6,0.2,0.2", "0.5,0.3,0.2"},
      {"0.4,0.4,0.1,0.1", "0.5,0.25,0.25,0"},
  };
  for (const auto& p : pairs) {
    const cli_result exact = invoke({"sweep", "grid", p[0], p[1], "--resolution", "40"});
    const cli_result fl =
        invoke({"sweep", "grid", p[0], p[1], "--resolution", "40", "--mode", "float"});
    CHECK(exact.code == 0);
    CHECK(fl.code == 0);
    CHECK(verdict_columns(exact.out) == verdict_columns(fl.out));
  }
}

TEST_CASE("random sweeps are reproducible for a seed and always consistent") {
  const std::vector<std::string> args{"sweep",  "random", "--pairs", "6",
                                      "--seed", "7",      "--resolution", "12"};
  const cli_result a = invoke(args);
  const cli_result b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("pair_id,catalyst,") == 0);
  // 11 grid rows plus one existence cross-check row per pair
  CHECK(verdict_columns(a.out).size() == 6 * 12);
  const cli_result other =
      invoke({"sweep", "random", "--pairs", "6", "--seed", "8", "--resolution", "12"});
  CHECK(other.out != a.out);
}

TEST_CASE("sweep writes CSV files on request") {
  const std::string path = "cli_test_sweep.csv";
  const cli_result r = invoke({"sweep", "grid", "0.6,0.2,0.2", "0.5,0.4,0.1",
                               "--resolution", "20", "--csv", path});
  CHECK(r.code == 0);
  std::ifstream file(path);
  REQUIRE(file.good());
  std::ostringstream content;
  content << file.rdbuf();
  CHECK(content.str() == golden("sweep_grid_pair_a_res20.csv"));
  std::remove(path.c_str());
}

TEST_CASE("json sweep carries both verdicts per row") {
  const cli_result r = invoke(
      {"sweep", "grid", "0.6,0.2,0.2", "0.5,0.4,0.1", "--resolution", "8", "--json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["disagreements"] == 0);
  REQUIRE(doc["rows"].size() == 7);
  for (const auto& row : doc["rows"]) {
    CHECK(row.contains("useful_oracle"));
    CHECK(row.contains("useful_theorem"));
    CHECK(row["agree"] == true);
  }
}
