// SPDX-License-Identifier: MIT
//
// Command-line front end for the accreditation library. Talks to the
// library through its C interface only.

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "accred/capi.h"

namespace {

struct CliOptions {
  std::string config_path;
  std::string out_dir;
  // Overrides forwarded verbatim to the library config parser as
  // (key, value) pairs, in the order given on the command line.
  std::vector<std::pair<std::string, std::string>> overrides;
};

void add_override_flag(CLI::App* cmd, CliOptions* opts, const std::string& flag,
                       const std::string& key, const std::string& help) {
  cmd->add_option_function<std::string>(
      flag,
      [opts, key](const std::string& value) {
        opts->overrides.emplace_back(key, value);
      },
      help);
}

void add_common_options(CLI::App* cmd, CliOptions* opts) {
  cmd->add_option("--config", opts->config_path,
                  "configuration file (flat key = value lines)");
  cmd->add_option("--out", opts->out_dir,
                  "output directory (overrides out_dir from the config)");
  add_override_flag(cmd, opts, "--seed", "seed", "root random seed");
  add_override_flag(cmd, opts, "--shots", "shots", "samples drawn per target run");
  add_override_flag(cmd, opts, "--theta", "theta",
                    "accuracy parameter of the trap-rate estimate");
  add_override_flag(cmd, opts, "--alpha", "alpha", "confidence level");
  add_override_flag(cmd, opts, "--v", "v",
                    "trap count (0 derives it from theta and alpha)");
  add_override_flag(cmd, opts, "--epsilon", "epsilon",
                    "gate-dependence strength of the noise model");
  cmd->add_option_function<std::vector<std::string>>(
      "--set",
      [opts](const std::vector<std::string>& pairs) {
        for (const std::string& pair : pairs) {
          const std::size_t eq = pair.find('=');
          if (eq == std::string::npos) {
            throw CLI::ValidationError("--set", "expected key=value, got '" +
                                                    pair + "'");
          }
          opts->overrides.emplace_back(pair.substr(0, eq),
                                       pair.substr(eq + 1));
        }
      },
      "set any config key, as key=value (repeatable)");
}

int fail_with(char* err, int code) {
  if (err != nullptr) {
    std::fprintf(stderr, "%s\n", err);
    accred_string_free(err);
  } else {
    std::fprintf(stderr, "error\n");
  }
  return code;
}

int run(const CliOptions& opts, const char* command) {
  char* err = nullptr;
  accred_config* cfg = nullptr;
  if (!opts.config_path.empty()) {
    cfg = accred_config_load(opts.config_path.c_str(), &err);
    if (cfg == nullptr) {
      return fail_with(err, 1);
    }
  } else {
    cfg = accred_config_create();
    if (cfg == nullptr) {
      std::fprintf(stderr, "out of memory\n");
      return 1;
    }
  }
  for (const auto& [key, value] : opts.overrides) {
    if (accred_config_set(cfg, key.c_str(), value.c_str(), &err) != 0) {
      accred_config_free(cfg);
      return fail_with(err, 1);
    }
  }
  char* summary = nullptr;
  int rc = accred_run(cfg, command,
                      opts.out_dir.empty() ? nullptr : opts.out_dir.c_str(),
                      &summary, &err);
  accred_config_free(cfg);
  if (rc != 0) {
    return fail_with(err, rc);
  }
  if (summary != nullptr) {
    std::fprintf(stdout, "%s", summary);
    accred_string_free(summary);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"accreditation protocol for noisy quantum circuit runs"};
  app.set_version_flag("--version", std::string(accred_version()));
  app.require_subcommand(1);

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"accredit", "run the full protocol and write report.json"},
      {"oracle", "exact small-instance check of the certified bound"},
      {"diagnose", "fit trap outcomes against a bit-flip model"},
      {"compare-bounds", "tabulate the discard-variant overhead over a grid"},
      {"generate-traps", "emit trap circuits and a manifest"},
  };

  CliOptions opts;
  std::vector<CLI::App*> cmds;
  for (const Sub& s : subs) {
    CLI::App* cmd = app.add_subcommand(s.name, s.help);
    add_common_options(cmd, &opts);
    cmds.push_back(cmd);
  }

  CLI11_PARSE(app, argc, argv);

  for (std::size_t i = 0; i < cmds.size(); ++i) {
    if (cmds[i]->parsed()) {
      return run(opts, subs[i].name);
    }
  }
  std::fprintf(stderr, "no subcommand given\n");
  return 1;
}
