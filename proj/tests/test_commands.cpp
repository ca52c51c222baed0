// SPDX-License-Identifier: MIT
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include "json.hpp"

#include "accred/clifford.hpp"
#include "accred/commands.hpp"
#include "accred/serialize.hpp"

using namespace accred;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "accred_command_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ExperimentConfig small_config(const fs::path& out) {
  ExperimentConfig cfg;
  cfg.seed = 31;
  cfg.target = "ghz";
  cfg.n = 2;
  cfg.noise = "device";
  cfg.rate_1q = 0.002;
  cfg.rate_2q = 0.01;
  cfg.rate_meas = 0.015;
  cfg.theta = 0.5;
  cfg.alpha = 0.6;
  cfg.out_dir = out.string();
  return cfg;
}

}  // namespace

TEST_CASE("accredit writes a deterministic report") {
  fs::path dir = fresh_dir("accredit");
  ExperimentConfig cfg = small_config(dir);
  std::string summary = cmd_accredit(cfg);
  CHECK(summary.find("traps: 13") != std::string::npos);
  std::string first = slurp(dir / "report.json");
  auto j = nlohmann::json::parse(first);
  CHECK(j["v"] == 13);
  CHECK(j["theta"] == 0.5);
  CHECK(j.contains("bound"));
  CHECK(j.contains("target_samples"));
  CHECK(j["trap_outcomes"].size() == 13);
  // Byte-identical on a second run.
  cmd_accredit(cfg);
  CHECK(slurp(dir / "report.json") == first);
  // A different seed changes the bytes.
  cfg.seed = 32;
  cmd_accredit(cfg);
  CHECK(slurp(dir / "report.json") != first);
}

TEST_CASE("oracle reports the exact check and optional robustness table") {
  fs::path dir = fresh_dir("oracle");
  ExperimentConfig cfg = small_config(dir);
  std::string summary = cmd_oracle(cfg);
  CHECK(summary.find("holds") != std::string::npos);
  auto j = nlohmann::json::parse(slurp(dir / "oracle.json"));
  CHECK(j["holds"] == true);
  CHECK(j["bound"].get<double>() ==
        doctest::Approx(2.0 * j["p_inc"].get<double>()));
  CHECK(!fs::exists(dir / "robustness.csv"));

  cfg.epsilons = "0,0.01";
  cfg.robustness_seeds = 2;
  cmd_oracle(cfg);
  std::string csv = slurp(dir / "robustness.csv");
  CHECK(csv.rfind("epsilon,seed,vd,two_p_inc,holds\n", 0) == 0);
  int lines = 0;
  for (char ch : csv) {
    if (ch == '\n') ++lines;
  }
  CHECK(lines == 1 + 2 * 2);
}

TEST_CASE("diagnose fits recorded words from a file") {
  fs::path dir = fresh_dir("diagnose");
  ExperimentConfig cfg = small_config(dir);
  // Records over 2 qubits: 6 words carrying 4 set bits over 12 bit slots,
  // so the fitted per-bit rate is 1/3.
  fs::path words = dir / "words.txt";
  std::ofstream out(words, std::ios::binary);
  out << "00\n00\n00\n10\n01\n11\n";
  out.close();
  cfg.outputs_file = words.string();
  std::string summary = cmd_diagnose(cfg);
  CHECK(summary.find("6 words") != std::string::npos);
  std::string csv = slurp(dir / "hamming.csv");
  CHECK(csv.rfind("h,empirical,model\n", 0) == 0);
  CHECK(csv.find("\n0,0.5,") != std::string::npos);

  // Malformed record files are rejected with the offending line.
  std::ofstream bad(words, std::ios::binary);
  bad << "00\n0x\n";
  bad.close();
  try {
    cmd_diagnose(cfg);
    FAIL("expected a parse error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find(":2") != std::string::npos);
  }
}

TEST_CASE("diagnose simulates trap words when no file is given") {
  fs::path dir = fresh_dir("diagnose_sim");
  ExperimentConfig cfg = small_config(dir);
  cfg.shots = 2000;
  std::string summary = cmd_diagnose(cfg);
  CHECK(summary.find("2000 words") != std::string::npos);
  CHECK(fs::exists(dir / "hamming.csv"));
}

TEST_CASE("compare-bounds spans the configured grid") {
  fs::path dir = fresh_dir("bounds");
  ExperimentConfig cfg = small_config(dir);
  cfg.grid_min = 0.1;
  cfg.grid_max = 0.3;
  cfg.grid_step = 0.1;
  cmd_compare_bounds(cfg);
  std::string csv = slurp(dir / "bounds.csv");
  CHECK(csv.rfind("p_inc,eta_best,present_bound\n", 0) == 0);
  std::istringstream rows(csv);
  std::string row;
  std::getline(rows, row);  // header
  int count = 0;
  double expect = 0.1;
  while (std::getline(rows, row)) {
    double p = 0.0, eta = 0.0, present = 0.0;
    REQUIRE(std::sscanf(row.c_str(), "%lf,%lf,%lf", &p, &eta, &present) == 3);
    CHECK(p == doctest::Approx(expect).epsilon(1e-9));
    CHECK(present == doctest::Approx(2.0 * p).epsilon(1e-12));
    CHECK(eta > 0.0);
    expect += 0.1;
    ++count;
  }
  CHECK(count == 3);  // 0.1, 0.2, 0.3
}

TEST_CASE("generate-traps emits runnable circuits with a manifest") {
  fs::path dir = fresh_dir("traps");
  ExperimentConfig cfg = small_config(dir);
  cfg.count = 3;
  cmd_generate_traps(cfg);
  auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
  CHECK(manifest["count"] == 3);
  REQUIRE(manifest["traps"].size() == 3);
  for (int i = 0; i < 3; ++i) {
    fs::path file = dir / manifest["traps"][static_cast<size_t>(i)]["file"]
                              .get<std::string>();
    REQUIRE(fs::exists(file));
    Circuit trap = circuit_from_json_string(slurp(file));
    CHECK(trap.canonical_form());
    CHECK(trap.fully_clifford());
    Rng rng(9);
    CHECK(stabilizer_simulate(trap, rng) == 0);
  }
  // count = 0 leaves an empty manifest and no circuit files.
  fs::path empty_dir = fresh_dir("traps_empty");
  cfg = small_config(empty_dir);
  cfg.count = 0;
  cmd_generate_traps(cfg);
  auto empty = nlohmann::json::parse(slurp(empty_dir / "manifest.json"));
  CHECK(empty["count"] == 0);
  CHECK(empty["traps"].empty());
  CHECK(!fs::exists(empty_dir / "trap_0.json"));
}

TEST_CASE("command dispatch rejects unknown names") {
  ExperimentConfig cfg = small_config(fresh_dir("dispatch"));
  CHECK_THROWS_AS(run_command(cfg, "florble"), std::invalid_argument);
  CHECK(run_command(cfg, "compare-bounds").find("grid") != std::string::npos);
}
