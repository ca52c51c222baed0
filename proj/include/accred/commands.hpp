// SPDX-License-Identifier: MIT
#pragma once

#include <string>

#include "accred/config.hpp"

namespace accred {

// Each command validates the config, writes its artifacts into
// config.out_dir (created if missing) and returns a short human-readable
// summary. Invalid configs and I/O failures throw; bound triviality and
// similar findings are data, not errors.

// report.json
std::string cmd_accredit(const ExperimentConfig& config);
// oracle.json, plus robustness.csv when an epsilon list is configured
std::string cmd_oracle(const ExperimentConfig& config);
// hamming.csv
std::string cmd_diagnose(const ExperimentConfig& config);
// bounds.csv
std::string cmd_compare_bounds(const ExperimentConfig& config);
// trap_<i>.json files and manifest.json
std::string cmd_generate_traps(const ExperimentConfig& config);

// Dispatch by subcommand name (accredit, oracle, diagnose, compare-bounds,
// generate-traps).
std::string run_command(const ExperimentConfig& config,
                        const std::string& command);

}  // namespace accred
