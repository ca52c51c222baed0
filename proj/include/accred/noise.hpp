// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "accred/circuit.hpp"
#include "accred/pauli.hpp"
#include "accred/rng.hpp"

namespace accred {

// Sparse stochastic-Pauli distribution for one fault slot. Entries list
// non-identity Paulis with their probabilities; the identity carries the
// remaining mass implicitly.
struct CyclePauliNoise {
  std::vector<std::pair<PauliString, double>> entries;

  double q_tot() const;
  void validate() const;  // rates >= 0, total <= 1, no identity entries
  void add(const PauliString& p, double rate);
  // One draw; identity with probability 1 - q_tot.
  PauliString sample(int n, Rng& rng) const;
};

struct GateDependence {
  double epsilon = 0.0;
  uint64_t seed = 0;
};

struct DeviceProfile {
  double rate_1q = 0.0;
  double rate_2q = 0.0;
  double rate_meas = 0.0;
};

// Full noise model for a canonical circuit with m one-qubit cycles: one Pauli
// slot per boundary (slot 0 after preparation, slot j after entangling cycle
// j, slot m before measurement), plus classical per-qubit preparation and
// measurement flips, plus optional gate-dependent perturbation of the slots.
struct NoiseModel {
  int n = 0;
  std::vector<CyclePauliNoise> slots;  // length m + 1
  double prep_flip = 0.0;
  double meas_flip = 0.0;
  std::optional<GateDependence> gate_dependence;
  // When true, the flip locations enter the rate accounting with the exact
  // 1-(1-r)^n complement instead of the linear n*r approximation.
  bool exact_flip_rates = false;

  int m() const { return static_cast<int>(slots.size()) - 1; }
  bool trivial() const;
  void validate(int circuit_n, int circuit_m) const;

  // The slot distribution seen when executing the given one-qubit cycle, with
  // the gate-dependent perturbation applied if configured.
  CyclePauliNoise slot_for_cycle(int slot, const OneQubitCycle& cycle) const;

  static NoiseModel noiseless(int n, int m);
};

// Builds the per-slot model for a circuit from scalar device rates: each
// entangling gate contributes rate_2q spread uniformly over the 15 non-trivial
// Paulis on its pair, each one-qubit cycle contributes rate_1q spread over the
// 3n weight-1 Paulis (attached to the slot after that cycle's entangler),
// and measurement is a per-qubit classical flip at rate_meas.
NoiseModel from_device_profile(const DeviceProfile& profile, const Circuit& c);

// Deterministic perturbation of one slot distribution keyed on (seed, content
// hash of the one-qubit cycle): renormalized multiplicative jitter with total
// variation from the base distribution <= epsilon, exactly the base when
// epsilon is 0.
CyclePauliNoise gate_dependent_variant(const CyclePauliNoise& base,
                                       double epsilon, uint64_t seed,
                                       const OneQubitCycle& cycle);

uint64_t cycle_content_hash(const OneQubitCycle& cycle);

// Probability that at least one fault location fires: the complement product
// over all Pauli slots and, when flips are present, the preparation and
// measurement locations (always exact complements here).
double p_err_total(const NoiseModel& model);

// Per-location rates entering the pair-cancellation bound; flip locations use
// the linear n*r pseudo-rate unless exact_flip_rates is set.
std::vector<double> location_rates(const NoiseModel& model);

// Sum of rate products over unordered location pairs, the union bound on the
// probability that two fault locations cancel each other.
double cancellation_bound_C(const std::vector<double>& rates);
double cancellation_bound_C(const NoiseModel& model);

}  // namespace accred
