// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "accred/circuit.hpp"
#include "accred/noise.hpp"

namespace accred {

// Parse or validation failure, anchored to a config line when one applies.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, int line, const std::string& what)
      : std::runtime_error(line > 0
                               ? source + ":" + std::to_string(line) + ": " +
                                     what
                               : source + ": " + what) {}
};

// Flat key-value experiment description. Every field has a documented key;
// unknown keys and duplicate keys are rejected with the offending line.
struct ExperimentConfig {
  // reproducibility
  std::optional<uint64_t> seed;

  // target selection: exactly one source (a builder or a circuit file)
  std::string target;             // "ghz", "qft", "random" or "file"
  int n = 0;                      // builder width
  std::string topology = "tree";  // ghz: "tree" or "chain"
  int m = 0;                      // random: one-qubit cycle count
  std::string circuit_file;       // target = file

  // protocol parameters
  double theta = 0.13;
  double alpha = 0.95;
  int v = 0;  // 0 = derive from (theta, alpha)
  long target_shots = 1;

  // sampling sizes for diagnose / oracle cross-checks
  long shots = 100000;

  // noise selection
  std::string noise = "none";  // "none", "device" or "file"
  double rate_1q = 0.0;
  double rate_2q = 0.0;
  double rate_meas = 0.0;
  double prep_flip = 0.0;  // extra classical flips on top of the model
  double meas_flip = 0.0;
  std::string noise_file;
  double epsilon = 0.0;  // gate-dependence strength; 0 = independent
  uint64_t noise_seed = 0;

  // command-specific inputs
  std::optional<double> p_flip;  // diagnose: evaluate the model here
  std::string outputs_file;      // diagnose: pre-recorded words, one per line
  int count = 0;                 // generate-traps
  double grid_min = 0.01;        // compare-bounds
  double grid_max = 0.5;
  double grid_step = 0.01;
  std::string epsilons;          // oracle: comma list for the robustness table
  int robustness_seeds = 10;

  std::string out_dir = ".";
};

// Parses the flat key = value format ('#' comments, blank lines allowed).
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text,
                                   const std::string& source_name);

// Applies one key (the same names the file format uses); line 0 errors.
void apply_config_key(ExperimentConfig& config, const std::string& key,
                      const std::string& value,
                      const std::string& source_name = "<override>",
                      int line = 0);

// Cross-field checks: seed present, exactly one target source, ranges.
void validate_config(const ExperimentConfig& config);

// Instantiates the target circuit and the noise model the config describes.
Circuit build_target(const ExperimentConfig& config);
NoiseModel build_noise(const ExperimentConfig& config, const Circuit& target);

}  // namespace accred
