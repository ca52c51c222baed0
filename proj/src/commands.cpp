// SPDX-License-Identifier: MIT
#include "accred/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "accred/accredit.hpp"
#include "accred/analysis.hpp"
#include "accred/executor.hpp"
#include "accred/serialize.hpp"

namespace accred {

namespace {

void write_file(const std::string& dir, const std::string& name,
                const std::string& content) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = std::filesystem::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<double> parse_epsilon_list(const std::string& text) {
  std::vector<double> values;
  std::istringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    size_t consumed = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &consumed);
    } catch (const std::exception&) {
      throw ConfigError("<config>", 0,
                        "epsilons must be a comma-separated number list");
    }
    while (consumed < item.size() &&
           (item[consumed] == ' ' || item[consumed] == '\t')) {
      ++consumed;
    }
    if (consumed != item.size() || value < 0.0) {
      throw ConfigError("<config>", 0,
                        "epsilons must be a comma-separated number list");
    }
    values.push_back(value);
  }
  if (values.empty()) {
    throw ConfigError("<config>", 0, "epsilons list is empty");
  }
  return values;
}

std::vector<uint64_t> load_words(const std::string& path, int& n_out) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "cannot open outputs file");
  std::vector<uint64_t> words;
  std::string line;
  int n = 0;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    if (n == 0) {
      n = static_cast<int>(line.size());
      if (n > 63) throw ConfigError(path, lineno, "bitstring too wide");
    } else if (static_cast<int>(line.size()) != n) {
      throw ConfigError(path, lineno, "inconsistent bitstring length");
    }
    uint64_t word = 0;
    for (int q = 0; q < n; ++q) {
      const char c = line[static_cast<size_t>(q)];
      if (c == '1') {
        word |= uint64_t{1} << q;
      } else if (c != '0') {
        throw ConfigError(path, lineno, "bitstrings must be 0/1");
      }
    }
    words.push_back(word);
  }
  if (words.empty()) throw ConfigError(path, 0, "outputs file is empty");
  n_out = n;
  return words;
}

}  // namespace

std::string cmd_accredit(const ExperimentConfig& config) {
  validate_config(config);
  const Circuit target = build_target(config);
  const NoiseModel model = build_noise(config, target);

  ProtocolParams params;
  params.theta = config.theta;
  params.alpha = config.alpha;
  params.v = config.v;
  params.rng_seed = *config.seed;
  params.target_shots = config.target_shots;

  SimulatedNoisyExecutor exec(model);
  const AccreditationReport report = run_protocol(target, params, exec);
  write_file(config.out_dir, "report.json", report.to_json().dump(2) + "\n");
  return report.summary();
}

std::string cmd_oracle(const ExperimentConfig& config) {
  validate_config(config);
  const Circuit target = build_target(config);
  const NoiseModel model = build_noise(config, target);

  const VdBoundCheck check = vd_vs_bound(target, model);
  nlohmann::ordered_json j;
  j["vd"] = check.vd;
  j["p_inc"] = check.p_inc;
  j["bound"] = check.bound;
  j["holds"] = check.holds;
  write_file(config.out_dir, "oracle.json", j.dump(2) + "\n");

  std::string summary;
  char line[192];
  std::snprintf(line, sizeof(line),
                "exact vd %.6g vs bound %.6g (p_inc %.6g): %s\n", check.vd,
                check.bound, check.p_inc, check.holds ? "holds" : "violated");
  summary += line;

  if (!config.epsilons.empty()) {
    std::vector<RobustnessRow> rows;
    for (double epsilon : parse_epsilon_list(config.epsilons)) {
      for (int s = 0; s < config.robustness_seeds; ++s) {
        const uint64_t seed =
            substream_seed(*config.seed, 0x726f62u + static_cast<uint64_t>(s));
        rows.push_back(
            gate_dependence_robustness(target, model, epsilon, seed));
      }
    }
    write_file(config.out_dir, "robustness.csv", robustness_csv(rows));
    int held = 0;
    for (const auto& row : rows) held += row.holds ? 1 : 0;
    std::snprintf(line, sizeof(line),
                  "robustness: %d/%zu rows within the slacked bound\n", held,
                  rows.size());
    summary += line;
  }
  return summary;
}

std::string cmd_diagnose(const ExperimentConfig& config) {
  validate_config(config);
  std::vector<uint64_t> words;
  int n = 0;
  if (!config.outputs_file.empty()) {
    words = load_words(config.outputs_file, n);
  } else {
    const Circuit target = build_target(config);
    const NoiseModel model = build_noise(config, target);
    n = target.n;
    SimulatedNoisyExecutor exec(model);
    words.reserve(static_cast<size_t>(config.shots));
    for (long i = 0; i < config.shots; ++i) {
      Rng gen = Rng::substream(*config.seed, 2 * static_cast<uint64_t>(i));
      const TrapCircuit trap = generate_trap(target, gen);
      ScheduledCircuit sc;
      sc.circuit = &trap.circuit;
      sc.pre_pad = &trap.padless;
      sc.trap = &trap;
      sc.index = static_cast<int>(i);
      const uint64_t seed =
          substream_seed(*config.seed, 2 * static_cast<uint64_t>(i) + 1);
      words.push_back(exec.run(sc, 1, seed).at(0));
    }
  }

  const HammingDiagnostic d = hamming_diagnostic(words, n, config.p_flip);
  write_file(config.out_dir, "hamming.csv", hamming_csv(d));
  char line[192];
  std::snprintf(line, sizeof(line),
                "hamming profile over %zu words: fitted flip rate %.6g, "
                "model at %.6g, tv %.6g\n",
                words.size(), d.p_mle, d.p_model, d.tv);
  return line;
}

std::string cmd_compare_bounds(const ExperimentConfig& config) {
  validate_config(config);
  std::vector<double> grid;
  const int steps = static_cast<int>(
      (config.grid_max - config.grid_min) / config.grid_step + 1e-9);
  for (int k = 0; k <= steps; ++k) {
    grid.push_back(config.grid_min + k * config.grid_step);
  }
  write_file(config.out_dir, "bounds.csv", bounds_csv(grid));
  char line[96];
  std::snprintf(line, sizeof(line), "bound comparison over %zu grid points\n",
                grid.size());
  return line;
}

std::string cmd_generate_traps(const ExperimentConfig& config) {
  validate_config(config);
  const Circuit target = build_target(config);

  nlohmann::ordered_json manifest;
  manifest["count"] = config.count;
  manifest["seed"] = *config.seed;
  manifest["n"] = target.n;
  manifest["m"] = target.num_u_cycles();
  nlohmann::ordered_json traps = nlohmann::ordered_json::array();
  for (int i = 0; i < config.count; ++i) {
    Rng gen = Rng::substream(*config.seed, static_cast<uint64_t>(i));
    const TrapCircuit trap = generate_trap(target, gen);
    char name[40];
    std::snprintf(name, sizeof(name), "trap_%d.json", i);
    write_file(config.out_dir, name, circuit_to_json_string(trap.circuit));

    nlohmann::ordered_json entry;
    entry["file"] = name;
    entry["t"] = trap.t_bit;
    entry["choices"] = trap.hs_choices;
    nlohmann::ordered_json pads = nlohmann::ordered_json::array();
    for (const auto& p : trap.qotp) pads.push_back(p.label());
    entry["qotp"] = pads;
    traps.push_back(std::move(entry));
  }
  manifest["traps"] = std::move(traps);
  write_file(config.out_dir, "manifest.json", manifest.dump(2) + "\n");
  char line[96];
  std::snprintf(line, sizeof(line), "wrote %d trap circuits\n", config.count);
  return line;
}

std::string run_command(const ExperimentConfig& config,
                        const std::string& command) {
  if (command == "accredit") return cmd_accredit(config);
  if (command == "oracle") return cmd_oracle(config);
  if (command == "diagnose") return cmd_diagnose(config);
  if (command == "compare-bounds") return cmd_compare_bounds(config);
  if (command == "generate-traps") return cmd_generate_traps(config);
  throw std::invalid_argument("unknown command '" + command + "'");
}

}  // namespace accred
