// SPDX-License-Identifier: MIT
#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "accred/gate.hpp"

namespace accred {

// One layer of single-qubit gates; gates[q] acts on qubit q.
struct OneQubitCycle {
  std::vector<Gate1Q> gates;

  static OneQubitCycle identity(int n);
  bool all_clifford() const;
  bool is_identity() const;
};

enum class EntanglerKind { CZ, CX };

// One layer of two-qubit gates on disjoint pairs. CZ pairs are unordered;
// for CX the first element is the control.
struct EntanglingCycle {
  EntanglerKind kind = EntanglerKind::CZ;
  std::vector<std::pair<int, int>> pairs;

  void normalize();  // sorts pairs (and orients CZ pairs low-high)
};

using Cycle = std::variant<OneQubitCycle, EntanglingCycle>;

inline bool is_u1(const Cycle& c) {
  return std::holds_alternative<OneQubitCycle>(c);
}

// A layered circuit on n qubits. The canonical form alternates one-qubit and
// entangling cycles, starting and ending with a one-qubit cycle and using
// only CZ entanglers, so its depth is 2m - 1 for m one-qubit cycles.
// Qubits are prepared in |0> and measured in the Z basis; bit q of every
// outcome word corresponds to qubit q.
struct Circuit {
  int n = 0;
  std::vector<Cycle> cycles;

  int depth() const { return static_cast<int>(cycles.size()); }
  void validate() const;  // sizes, pair bounds, pair disjointness
  bool canonical_form() const;
  void require_canonical() const;

  // Number of one-qubit cycles; equals (depth + 1) / 2 in canonical form.
  int num_u_cycles() const;

  // 1-based accessors for canonical circuits: u_cycle(j) is the j-th
  // one-qubit cycle, e_cycle(j) the entangling cycle that follows it.
  const OneQubitCycle& u_cycle(int j) const;
  const EntanglingCycle& e_cycle(int j) const;
  OneQubitCycle& u_cycle_mut(int j);

  bool fully_clifford() const;
};

// Collapses every run of adjacent one-qubit cycles into a single cycle.
// Products of Clifford gates stay symbolic; anything else becomes a generic
// unitary. Entangling cycles are left untouched.
Circuit merge_adjacent_1q_cycles(const Circuit& c);

// Rewrites every CX layer as H on the targets, a CZ layer, H on the targets.
// The new one-qubit cycles are merged into their neighbours so a circuit in
// canonical-but-for-CX form comes back canonical with the same cycle count.
Circuit recompile_cx_to_cz(const Circuit& c);

}  // namespace accred
