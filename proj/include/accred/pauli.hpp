// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>

namespace accred {

// Phaseless n-qubit Pauli operator. Qubit q's X (resp. Z) component lives in
// bit q of `x` (resp. `z`); Y means both bits set. Signs are deliberately not
// tracked: every consumer in this library only cares about measurement
// statistics, which phases cannot affect.
struct PauliString {
  int n = 0;
  uint64_t x = 0;
  uint64_t z = 0;

  PauliString() = default;
  PauliString(int n_qubits, uint64_t x_mask, uint64_t z_mask);

  static PauliString identity(int n_qubits) { return {n_qubits, 0, 0}; }

  bool is_identity() const { return x == 0 && z == 0; }
  int weight() const;

  // Group product with phases dropped.
  void mul(const PauliString& o);

  char component(int q) const;  // 'I', 'X', 'Y' or 'Z'
  void set_component(int q, char p);

  // Compact label such as "X0Y3"; the identity renders as "I".
  std::string label() const;
  static PauliString parse(const std::string& label, int n_qubits);

  bool operator==(const PauliString&) const = default;
};

// Parity of the symplectic inner product: 1 when a and b anticommute.
int symplectic(const PauliString& a, const PauliString& b);

}  // namespace accred
