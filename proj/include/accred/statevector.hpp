// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <vector>

#include "accred/circuit.hpp"
#include "accred/pauli.hpp"
#include "accred/rng.hpp"

namespace accred {

struct NoiseModel;

// Probability table over n-bit outcomes; index bit q corresponds to qubit q.
struct Distribution {
  int n = 0;
  std::vector<double> p;

  static Distribution zeros(int n);
  double total() const;
  void validate(double tol = 1e-9) const;  // normalization check
};

inline constexpr int kStatevectorCap = 14;

class StateVector {
 public:
  explicit StateVector(int n);  // |0...0>

  int n() const { return n_; }
  void apply_gate(const Mat2& u, int q);
  void apply_cycle(const Cycle& cy);
  // Applies every cycle, asserting norm preservation within 1e-10 after each.
  void apply_circuit(const Circuit& c);
  void apply_pauli(const PauliString& p);
  double norm() const;
  Distribution distribution() const;
  cplx amp(uint64_t idx) const { return a_[idx]; }

 private:
  int n_;
  std::vector<cplx> a_;
};

// Exact Born-rule output distribution of a noiseless circuit (n <= 14).
Distribution ideal_distribution(const Circuit& c);

// Exact output distribution under one concrete fault pattern: X^prep_mask
// after preparation, then slots[j] right after entangling cycle j (slot 0
// with the preparation faults, slot m before measurement).
Distribution faulted_distribution(const Circuit& c, uint64_t prep_mask,
                                  const std::vector<PauliString>& slots);

// One inverse-CDF sample from a distribution.
uint64_t sample_distribution(const Distribution& d, Rng& rng);

// Monte Carlo noisy execution: per shot, one Pauli per slot is drawn from the
// model, plus preparation/measurement flip masks. Fully Clifford circuits
// take the stabilizer fast path. Returns one outcome word per shot.
std::vector<uint64_t> sample_noisy(const Circuit& c, const NoiseModel& model,
                                   long shots, Rng& rng);

Distribution empirical_distribution(const std::vector<uint64_t>& samples,
                                    int n);

}  // namespace accred
