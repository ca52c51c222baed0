// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <vector>

#include "accred/circuit.hpp"

namespace accred {

// GHZ-preparation circuit over a cascade topology. Each entangling cycle must
// pair already-entangled qubits with fresh ones (starting from qubit 0), and
// the cascade must reach every qubit; otherwise the topology is rejected.
// Emitted in canonical form: Hadamards merged around a CZ cascade.
Circuit build_ghz_layout(int n, const std::vector<EntanglingCycle>& topology);

// Doubling cascade reaching n qubits in ceil(log2(n)) steps (the widest GHZ
// shape used in the experiments this models) and a linear chain alternative.
std::vector<EntanglingCycle> ghz_tree_topology(int n);
std::vector<EntanglingCycle> ghz_chain_topology(int n);

// Quantum Fourier transform applied to the uniform superposition (Hadamard
// preparation merged in). Controlled-phase gates are decomposed into two CZs
// with generic one-qubit interleaves and packed by commuting layers, giving
// 4n-5 one-qubit cycles for n >= 2. Bit-reversal swaps are omitted; the ideal
// output of the full circuit is |0...0>.
Circuit build_qft_layout(int n);

// Pseudo-random layered circuit: Haar-random SU(2) gates in every one-qubit
// cycle over the supplied entangling pattern (m - 1 cycles). Deterministic in
// the seed.
Circuit build_random_layout(int n, int m, uint64_t seed,
                            const std::vector<EntanglingCycle>& pattern);

// Alternating brick pattern: even cycles pair (0,1),(2,3),..., odd cycles
// pair (1,2),(3,4),...
std::vector<EntanglingCycle> brick_pattern(int n, int m);

}  // namespace accred
