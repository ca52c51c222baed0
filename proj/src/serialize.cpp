// SPDX-License-Identifier: MIT
#include "accred/serialize.hpp"

#include <cstdio>
#include <stdexcept>
#include <utility>

#include "accred/noise.hpp"
#include "accred/statevector.hpp"

namespace accred {

namespace {

nlohmann::ordered_json gate_to_json(const Gate1Q& g) {
  nlohmann::ordered_json j;
  if (const char* nm = g.name()) {
    j["k"] = nm;
    return j;
  }
  j["k"] = "G";
  const cplx* e[4] = {&g.u.a, &g.u.b, &g.u.c, &g.u.d};
  nlohmann::ordered_json u = nlohmann::ordered_json::array();
  for (int i = 0; i < 4; ++i) {
    u.push_back({e[i]->real(), e[i]->imag()});
  }
  j["u"] = u;
  return j;
}

Gate1Q gate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k")) {
    throw std::invalid_argument("circuit JSON: gate needs a \"k\" field");
  }
  std::string k = j.at("k").get<std::string>();
  if (k == "I") return Gate1Q::id();
  if (k == "X") return Gate1Q::x();
  if (k == "Y") return Gate1Q::y();
  if (k == "Z") return Gate1Q::z();
  if (k == "H") return Gate1Q::h();
  if (k == "S") return Gate1Q::s();
  if (k == "Sdg") return Gate1Q::sdg();
  if (k != "G") {
    throw std::invalid_argument("circuit JSON: unknown gate kind '" + k + "'");
  }
  const auto& u = j.at("u");
  if (!u.is_array() || u.size() != 4) {
    throw std::invalid_argument(
        "circuit JSON: generic gate needs \"u\" with four [re,im] entries");
  }
  cplx e[4];
  for (int i = 0; i < 4; ++i) {
    const auto& pair = u.at(static_cast<size_t>(i));
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("circuit JSON: matrix entry must be [re,im]");
    }
    e[i] = cplx{pair.at(0).get<double>(), pair.at(1).get<double>()};
  }
  Mat2 m{e[0], e[1], e[2], e[3]};
  return Gate1Q::from_matrix(m);
}

}  // namespace

nlohmann::ordered_json circuit_to_json(const Circuit& c) {
  c.validate();
  nlohmann::ordered_json j;
  j["n"] = c.n;
  nlohmann::ordered_json cycles = nlohmann::ordered_json::array();
  for (const auto& cy : c.cycles) {
    nlohmann::ordered_json jc;
    if (is_u1(cy)) {
      jc["type"] = "u1";
      nlohmann::ordered_json gates = nlohmann::ordered_json::array();
      for (const auto& g : std::get<OneQubitCycle>(cy).gates) {
        gates.push_back(gate_to_json(g));
      }
      jc["gates"] = gates;
    } else {
      const auto& e = std::get<EntanglingCycle>(cy);
      jc["type"] = e.kind == EntanglerKind::CZ ? "cz" : "cx";
      nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
      EntanglingCycle sorted = e;
      sorted.normalize();
      for (const auto& [a, b] : sorted.pairs) {
        pairs.push_back({a, b});
      }
      jc["pairs"] = pairs;
    }
    cycles.push_back(jc);
  }
  j["cycles"] = cycles;
  return j;
}

Circuit circuit_from_json(const nlohmann::json& j) {
  Circuit c;
  if (!j.is_object() || !j.contains("n") || !j.contains("cycles")) {
    throw std::invalid_argument(
        "circuit JSON: expected {\"n\":..., \"cycles\":[...]}");
  }
  c.n = j.at("n").get<int>();
  for (const auto& jc : j.at("cycles")) {
    std::string type = jc.at("type").get<std::string>();
    if (type == "u1") {
      OneQubitCycle u;
      for (const auto& jg : jc.at("gates")) {
        u.gates.push_back(gate_from_json(jg));
      }
      c.cycles.emplace_back(std::move(u));
    } else if (type == "cz" || type == "cx") {
      EntanglingCycle e;
      e.kind = type == "cz" ? EntanglerKind::CZ : EntanglerKind::CX;
      for (const auto& jp : jc.at("pairs")) {
        if (!jp.is_array() || jp.size() != 2) {
          throw std::invalid_argument("circuit JSON: pair must be [i,j]");
        }
        e.pairs.emplace_back(jp.at(0).get<int>(), jp.at(1).get<int>());
      }
      c.cycles.emplace_back(std::move(e));
    } else {
      throw std::invalid_argument("circuit JSON: unknown cycle type '" + type +
                                  "'");
    }
  }
  c.validate();
  return c;
}

std::string circuit_to_json_string(const Circuit& c) {
  return circuit_to_json(c).dump(2) + "\n";
}

Circuit circuit_from_json_string(const std::string& text) {
  return circuit_from_json(nlohmann::json::parse(text));
}

nlohmann::ordered_json noise_model_to_json(const NoiseModel& model) {
  nlohmann::ordered_json j;
  j["n"] = model.n;
  nlohmann::ordered_json slots = nlohmann::ordered_json::array();
  for (const auto& slot : model.slots) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [p, rate] : slot.entries) {
      entries.push_back({{"p", p.label()}, {"rate", rate}});
    }
    slots.push_back(std::move(entries));
  }
  j["slots"] = std::move(slots);
  j["prep_flip"] = model.prep_flip;
  j["meas_flip"] = model.meas_flip;
  if (model.exact_flip_rates) j["exact_flip_rates"] = true;
  if (model.gate_dependence) {
    j["gate_dependence"] = {{"epsilon", model.gate_dependence->epsilon},
                            {"seed", model.gate_dependence->seed}};
  }
  return j;
}

NoiseModel noise_model_from_json(const nlohmann::json& j) {
  NoiseModel model;
  model.n = j.at("n").get<int>();
  for (const auto& slot_json : j.at("slots")) {
    CyclePauliNoise slot;
    for (const auto& entry : slot_json) {
      slot.add(PauliString::parse(entry.at("p").get<std::string>(), model.n),
               entry.at("rate").get<double>());
    }
    model.slots.push_back(std::move(slot));
  }
  model.prep_flip = j.value("prep_flip", 0.0);
  model.meas_flip = j.value("meas_flip", 0.0);
  model.exact_flip_rates = j.value("exact_flip_rates", false);
  if (j.contains("gate_dependence")) {
    GateDependence dep;
    dep.epsilon = j.at("gate_dependence").at("epsilon").get<double>();
    dep.seed = j.at("gate_dependence").at("seed").get<uint64_t>();
    model.gate_dependence = dep;
  }
  if (model.slots.empty()) {
    throw std::invalid_argument("noise JSON: need at least one slot");
  }
  model.validate(model.n, static_cast<int>(model.slots.size()) - 1);
  return model;
}

std::string bitstring_to_string(uint64_t bits, int n) {
  std::string s(static_cast<size_t>(n), '0');
  for (int q = 0; q < n; ++q) {
    if ((bits >> q) & 1) s[static_cast<size_t>(q)] = '1';
  }
  return s;
}

std::string distribution_to_csv(const Distribution& d) {
  std::string out = "bitstring,probability\n";
  char buf[64];
  for (size_t i = 0; i < d.p.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", d.p[i]);
    out += bitstring_to_string(static_cast<uint64_t>(i), d.n);
    out += ',';
    out += buf;
    out += '\n';
  }
  return out;
}

}  // namespace accred
