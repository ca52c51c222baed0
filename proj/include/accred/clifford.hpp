// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <vector>

#include "accred/circuit.hpp"
#include "accred/pauli.hpp"
#include "accred/rng.hpp"

namespace accred {

struct TrapCircuit;

// Conjugation C P C^dagger with the phase discarded. Throws on generic
// (non-Clifford) gates.
PauliString conjugate_gate(const Gate1Q& g, int qubit, const PauliString& p);
PauliString conjugate_cycle(const Cycle& cy, const PauliString& p);

// A Pauli fault pattern with one slot per boundary: slot 0 right after
// preparation, slot j right after the j-th entangling cycle, slot m right
// before measurement.
struct FaultPattern {
  std::vector<PauliString> slots;  // length m + 1

  static FaultPattern identity(int n, int m);
  bool is_identity() const;
  int active_slots() const;
};

// Precomputed conjugation of every slot-local Pauli to the end of a Clifford
// circuit. When `conj_h` is set, an all-Hadamard cycle is treated as wrapped
// around the circuit (before slot 0 and after slot m), the frame used by
// conjugated trap cores; preparation-stage faults then propagate through the
// leading Hadamard cycle too.
class SuffixTables {
 public:
  SuffixTables(const Circuit& canonical, bool conj_h);

  int n() const { return n_; }
  int m() const { return m_; }
  // Image at the measurement boundary of a Pauli inserted at the given slot.
  PauliString propagate(int slot, const PauliString& p) const;
  // Image of a preparation-stage Pauli (before the leading Hadamard wrap).
  PauliString propagate_prep(const PauliString& p) const;
  // Merged terminal Pauli of a whole pattern.
  PauliString merge(const FaultPattern& pattern) const;

 private:
  int n_ = 0, m_ = 0;
  // images_[slot][2q + b]: image of X_q (b = 0) or Z_q (b = 1).
  std::vector<std::vector<PauliString>> images_;
  std::vector<PauliString> prep_images_;
};

// Commutes every slot Pauli forward to just before measurement and multiplies
// them into a single terminal Pauli. Identity result means the pattern
// cancels. Slots are structural on the given canonical circuit.
PauliString merge_fault_pattern(const Circuit& c, const FaultPattern& pattern);

// Deterministic trap outcome under a fault pattern, by Pauli propagation in
// the trap's conjugated frame: the X components of the merged Pauli are the
// flipped bits of the otherwise all-zeros output.
uint64_t trap_output_under_fault(const TrapCircuit& trap,
                                 const FaultPattern& pattern);

// Aaronson-Gottesman style stabilizer tableau over <= 63 qubits.
class StabilizerTableau {
 public:
  explicit StabilizerTableau(int n);  // stabilizes |0...0>

  int n() const { return n_; }
  void apply_h(int q);
  void apply_s(int q);
  void apply_cz(int a, int b);
  void apply_cx(int control, int target);
  void apply_gate(const Gate1Q& g, int q);  // throws on generic gates
  void apply_cycle(const Cycle& cy);
  void apply_circuit(const Circuit& c);
  void apply_pauli(const PauliString& p);
  int measure_z(int q, Rng& rng);  // collapses
  uint64_t measure_all(Rng& rng);

 private:
  void rowsum(int h, int i);
  int n_;
  std::vector<uint64_t> x_, z_;  // 2n + 1 rows (last is scratch)
  std::vector<uint8_t> r_;
};

// One measurement sample of a fully Clifford circuit on |0...0>.
uint64_t stabilizer_simulate(const Circuit& c, Rng& rng);

}  // namespace accred
