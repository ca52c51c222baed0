// SPDX-License-Identifier: MIT
#pragma once

#include <string>

#include "json.hpp"

#include "accred/circuit.hpp"

namespace accred {

struct Distribution;
struct NoiseModel;

// Circuit JSON schema:
//   {"n": int, "cycles": [
//      {"type": "u1", "gates": [{"k": "H"} | {"k": "G", "u": [[re,im] x4]} ...]}
//    | {"type": "cz", "pairs": [[i,j] ...]}
//    | {"type": "cx", "pairs": [[control,target] ...]} ]}
// Gates named I,X,Y,Z,H,S,Sdg serialize symbolically; any other gate carries
// its row-major matrix. Parsing recognizes Clifford matrices (up to global
// phase), so canonical files round-trip byte-for-byte.
nlohmann::ordered_json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);
std::string circuit_to_json_string(const Circuit& c);
Circuit circuit_from_json_string(const std::string& text);

// Noise model JSON schema:
//   {"n": int,
//    "slots": [[{"p": "X0", "rate": 0.1}, ...], ...],   // length m + 1
//    "prep_flip": num, "meas_flip": num,
//    "exact_flip_rates": bool,                           // optional
//    "gate_dependence": {"epsilon": num, "seed": int}}   // optional
nlohmann::ordered_json noise_model_to_json(const NoiseModel& model);
NoiseModel noise_model_from_json(const nlohmann::json& j);

// "bitstring,probability" rows in index order. Character position q of the
// bitstring corresponds to qubit q (least-significant-first rendering of the
// index encoding).
std::string distribution_to_csv(const Distribution& d);

std::string bitstring_to_string(uint64_t bits, int n);

}  // namespace accred
