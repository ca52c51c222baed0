// SPDX-License-Identifier: MIT
#include "accred/capi.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "accred/accredit.hpp"
#include "accred/commands.hpp"
#include "accred/config.hpp"

struct accred_config {
  accred::ExperimentConfig cfg;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out == nullptr) {
    return nullptr;
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** err, const std::string& message) {
  if (err != nullptr) {
    *err = dup_string(message);
  }
}

}  // namespace

extern "C" {

accred_config* accred_config_create(void) {
  return new (std::nothrow) accred_config{};
}

accred_config* accred_config_load(const char* path, char** err) {
  if (path == nullptr) {
    set_error(err, "path is null");
    return nullptr;
  }
  try {
    auto* out = new accred_config{};
    out->cfg = accred::load_config(path);
    return out;
  } catch (const std::exception& ex) {
    set_error(err, ex.what());
    return nullptr;
  }
}

int accred_config_set(accred_config* config, const char* key,
                      const char* value, char** err) {
  if (config == nullptr || key == nullptr || value == nullptr) {
    set_error(err, "null argument");
    return 1;
  }
  try {
    accred::apply_config_key(config->cfg, key, value, "option", 0);
    return 0;
  } catch (const std::exception& ex) {
    set_error(err, ex.what());
    return 1;
  }
}

void accred_config_free(accred_config* config) { delete config; }

int accred_run(const accred_config* config, const char* command,
               const char* out_dir, char** summary, char** err) {
  if (config == nullptr || command == nullptr) {
    set_error(err, "null argument");
    return 1;
  }
  accred::ExperimentConfig cfg = config->cfg;
  if (out_dir != nullptr && out_dir[0] != '\0') {
    cfg.out_dir = out_dir;
  }
  try {
    accred::validate_config(cfg);
  } catch (const std::exception& ex) {
    set_error(err, ex.what());
    return 1;
  }
  try {
    std::string text = accred::run_command(cfg, command);
    if (summary != nullptr) {
      *summary = dup_string(text);
    }
    return 0;
  } catch (const accred::ConfigError& ex) {
    set_error(err, ex.what());
    return 1;
  } catch (const std::invalid_argument& ex) {
    set_error(err, ex.what());
    return 1;
  } catch (const std::exception& ex) {
    set_error(err, ex.what());
    return 2;
  }
}

int accred_required_traps(double theta, double alpha, int* v_out, char** err) {
  try {
    int v = accred::required_traps(theta, alpha);
    if (v_out != nullptr) {
      *v_out = v;
    }
    return 0;
  } catch (const std::exception& ex) {
    set_error(err, ex.what());
    return 1;
  }
}

const char* accred_version(void) { return "0.1.0"; }

void accred_string_free(char* s) { delete[] s; }

}  // extern "C"
