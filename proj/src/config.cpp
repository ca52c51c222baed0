// SPDX-License-Identifier: MIT
#include "accred/config.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "accred/builders.hpp"
#include "accred/rng.hpp"
#include "accred/serialize.hpp"

namespace accred {

namespace {

std::string trim(const std::string& s) {
  const char* ws = " \t\r";
  const size_t begin = s.find_first_not_of(ws);
  if (begin == std::string::npos) return "";
  const size_t end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

uint64_t parse_u64(const std::string& value, const std::string& source,
                   int line, const std::string& key) {
  errno = 0;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(value.c_str(), &end, 10);
  if (errno != 0 || end == value.c_str() || *end != '\0') {
    throw ConfigError(source, line,
                      "key '" + key + "' needs an unsigned integer, got '" +
                          value + "'");
  }
  return static_cast<uint64_t>(parsed);
}

long parse_long(const std::string& value, const std::string& source, int line,
                const std::string& key) {
  errno = 0;
  char* end = nullptr;
  const long parsed = std::strtol(value.c_str(), &end, 10);
  if (errno != 0 || end == value.c_str() || *end != '\0') {
    throw ConfigError(source, line,
                      "key '" + key + "' needs an integer, got '" + value +
                          "'");
  }
  return parsed;
}

int parse_int(const std::string& value, const std::string& source, int line,
              const std::string& key) {
  const long parsed = parse_long(value, source, line, key);
  if (parsed < -2147483647L || parsed > 2147483647L) {
    throw ConfigError(source, line, "key '" + key + "' is out of range");
  }
  return static_cast<int>(parsed);
}

double parse_double(const std::string& value, const std::string& source,
                    int line, const std::string& key) {
  errno = 0;
  char* end = nullptr;
  const double parsed = std::strtod(value.c_str(), &end);
  if (errno != 0 || end == value.c_str() || *end != '\0') {
    throw ConfigError(source, line,
                      "key '" + key + "' needs a number, got '" + value +
                          "'");
  }
  return parsed;
}

// Probability that exactly one of two independent flips fires.
double combine_flips(double a, double b) {
  return a * (1.0 - b) + b * (1.0 - a);
}

}  // namespace

void apply_config_key(ExperimentConfig& config, const std::string& key,
                      const std::string& value,
                      const std::string& source_name, int line) {
  if (key == "seed") {
    config.seed = parse_u64(value, source_name, line, key);
  } else if (key == "target") {
    config.target = value;
  } else if (key == "n") {
    config.n = parse_int(value, source_name, line, key);
  } else if (key == "topology") {
    config.topology = value;
  } else if (key == "m") {
    config.m = parse_int(value, source_name, line, key);
  } else if (key == "circuit_file") {
    config.circuit_file = value;
  } else if (key == "theta") {
    config.theta = parse_double(value, source_name, line, key);
  } else if (key == "alpha") {
    config.alpha = parse_double(value, source_name, line, key);
  } else if (key == "v") {
    config.v = parse_int(value, source_name, line, key);
  } else if (key == "target_shots") {
    config.target_shots = parse_long(value, source_name, line, key);
  } else if (key == "shots") {
    config.shots = parse_long(value, source_name, line, key);
  } else if (key == "noise") {
    config.noise = value;
  } else if (key == "rate_1q") {
    config.rate_1q = parse_double(value, source_name, line, key);
  } else if (key == "rate_2q") {
    config.rate_2q = parse_double(value, source_name, line, key);
  } else if (key == "rate_meas") {
    config.rate_meas = parse_double(value, source_name, line, key);
  } else if (key == "prep_flip") {
    config.prep_flip = parse_double(value, source_name, line, key);
  } else if (key == "meas_flip") {
    config.meas_flip = parse_double(value, source_name, line, key);
  } else if (key == "noise_file") {
    config.noise_file = value;
  } else if (key == "epsilon") {
    config.epsilon = parse_double(value, source_name, line, key);
  } else if (key == "noise_seed") {
    config.noise_seed = parse_u64(value, source_name, line, key);
  } else if (key == "p_flip") {
    config.p_flip = parse_double(value, source_name, line, key);
  } else if (key == "outputs_file") {
    config.outputs_file = value;
  } else if (key == "count") {
    config.count = parse_int(value, source_name, line, key);
  } else if (key == "grid_min") {
    config.grid_min = parse_double(value, source_name, line, key);
  } else if (key == "grid_max") {
    config.grid_max = parse_double(value, source_name, line, key);
  } else if (key == "grid_step") {
    config.grid_step = parse_double(value, source_name, line, key);
  } else if (key == "epsilons") {
    config.epsilons = value;
  } else if (key == "robustness_seeds") {
    config.robustness_seeds = parse_int(value, source_name, line, key);
  } else if (key == "out_dir") {
    config.out_dir = value;
  } else {
    throw ConfigError(source_name, line, "unknown key '" + key + "'");
  }
}

ExperimentConfig parse_config_text(const std::string& text,
                                   const std::string& source_name) {
  ExperimentConfig config;
  std::istringstream stream(text);
  std::string raw;
  std::set<std::string> seen;
  int line = 0;
  while (std::getline(stream, raw)) {
    ++line;
    const size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string stripped = trim(raw);
    if (stripped.empty()) continue;
    const size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(source_name, line, "expected 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(source_name, line, "empty key");
    }
    if (!seen.insert(key).second) {
      throw ConfigError(source_name, line, "duplicate key '" + key + "'");
    }
    apply_config_key(config, key, value, source_name, line);
  }
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "cannot open config file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), path);
}

void validate_config(const ExperimentConfig& config) {
  const std::string src = "<config>";
  if (!config.seed) {
    throw ConfigError(src, 0, "missing required key 'seed'");
  }
  if (!config.target.empty() && config.target != "ghz" &&
      config.target != "qft" && config.target != "random" &&
      config.target != "file") {
    throw ConfigError(src, 0, "target must be ghz, qft, random or file");
  }
  if (config.target == "file" && config.circuit_file.empty()) {
    throw ConfigError(src, 0, "target = file needs circuit_file");
  }
  if (config.target != "file" && !config.circuit_file.empty()) {
    throw ConfigError(src, 0,
                      "circuit_file conflicts with a builder target; pick "
                      "exactly one target source");
  }
  if (config.noise != "none" && config.noise != "device" &&
      config.noise != "file") {
    throw ConfigError(src, 0, "noise must be none, device or file");
  }
  if (config.noise == "file" && config.noise_file.empty()) {
    throw ConfigError(src, 0, "noise = file needs noise_file");
  }
  if (!(config.theta > 0.0) || config.theta > 1.0) {
    throw ConfigError(src, 0, "theta must be in (0, 1]");
  }
  if (!(config.alpha > 0.0) || !(config.alpha < 1.0)) {
    throw ConfigError(src, 0, "alpha must be in (0, 1)");
  }
  if (config.v < 0) throw ConfigError(src, 0, "v must be non-negative");
  if (config.target_shots < 1) {
    throw ConfigError(src, 0, "target_shots must be positive");
  }
  if (config.shots < 1) throw ConfigError(src, 0, "shots must be positive");
  if (config.count < 0) throw ConfigError(src, 0, "count must be >= 0");
  if (config.epsilon < 0.0) {
    throw ConfigError(src, 0, "epsilon must be >= 0");
  }
  if (!(config.grid_step > 0.0) || !(config.grid_min > 0.0) ||
      !(config.grid_max < 1.0) || config.grid_max < config.grid_min) {
    throw ConfigError(src, 0, "bound grid must satisfy 0 < min <= max < 1");
  }
  if (config.robustness_seeds < 1) {
    throw ConfigError(src, 0, "robustness_seeds must be positive");
  }
}

Circuit build_target(const ExperimentConfig& config) {
  validate_config(config);
  const std::string src = "<config>";
  if (config.target.empty()) {
    throw ConfigError(src, 0, "missing required key 'target'");
  }
  if (config.target == "file") {
    std::ifstream in(config.circuit_file);
    if (!in) throw ConfigError(config.circuit_file, 0, "cannot open");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    Circuit c = circuit_from_json_string(buffer.str());
    c.require_canonical();
    return c;
  }
  if (config.n < 1) throw ConfigError(src, 0, "builder targets need n >= 1");
  if (config.target == "ghz") {
    if (config.n < 2) throw ConfigError(src, 0, "ghz needs n >= 2");
    if (config.topology == "tree") {
      return build_ghz_layout(config.n, ghz_tree_topology(config.n));
    }
    if (config.topology == "chain") {
      return build_ghz_layout(config.n, ghz_chain_topology(config.n));
    }
    throw ConfigError(src, 0, "topology must be tree or chain");
  }
  if (config.target == "qft") {
    return build_qft_layout(config.n);
  }
  // random
  if (config.m < 1) throw ConfigError(src, 0, "random target needs m >= 1");
  const uint64_t layout_seed =
      splitmix64(splitmix64(*config.seed) ^ 0x6c61796f7574ull);
  return build_random_layout(config.n, config.m, layout_seed,
                             brick_pattern(config.n, config.m));
}

NoiseModel build_noise(const ExperimentConfig& config, const Circuit& target) {
  NoiseModel model;
  if (config.noise == "none") {
    model = NoiseModel::noiseless(target.n, target.num_u_cycles());
  } else if (config.noise == "device") {
    DeviceProfile profile;
    profile.rate_1q = config.rate_1q;
    profile.rate_2q = config.rate_2q;
    profile.rate_meas = config.rate_meas;
    model = from_device_profile(profile, target);
  } else {
    std::ifstream in(config.noise_file);
    if (!in) throw ConfigError(config.noise_file, 0, "cannot open");
    nlohmann::json j;
    in >> j;
    model = noise_model_from_json(j);
  }
  model.prep_flip = combine_flips(model.prep_flip, config.prep_flip);
  model.meas_flip = combine_flips(model.meas_flip, config.meas_flip);
  if (config.epsilon > 0.0) {
    model.gate_dependence = GateDependence{config.epsilon, config.noise_seed};
  }
  model.validate(target.n, target.num_u_cycles());
  return model;
}

}  // namespace accred
