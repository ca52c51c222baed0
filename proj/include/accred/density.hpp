// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "accred/circuit.hpp"
#include "accred/noise.hpp"
#include "accred/pauli.hpp"
#include "accred/statevector.hpp"

namespace accred {

// Width cap for exact density-matrix evolution (16 x 16 matrices).
inline constexpr int kDensityCap = 4;

// Exact mixed-state evolution on few qubits. Used as the reference route when
// checking the sampling engines and the channel identities; everything is
// dense and unoptimized on purpose.
class DensityMatrix {
 public:
  static DensityMatrix pure_zero(int n);

  int n() const { return n_; }
  const Eigen::MatrixXcd& matrix() const { return rho_; }

  void apply_unitary(const Eigen::MatrixXcd& u);
  void apply_cycle(const Cycle& cy);
  void apply_circuit(const Circuit& c);
  // rho -> (1 - sum q) rho + sum_i q_i P_i rho P_i
  void apply_pauli_channel(const CyclePauliNoise& noise);
  // Independent X flip with probability p on every qubit.
  void apply_flip_channel(double p);
  void apply_kraus(const std::vector<Eigen::MatrixXcd>& kraus);

  Distribution diagonal() const;
  double trace_real() const;
  // Hermiticity and unit trace within 1e-10, eigenvalues >= -1e-8.
  void check_invariants() const;

 private:
  explicit DensityMatrix(int n);
  int n_;
  Eigen::MatrixXcd rho_;
};

// Full 2^n unitary of one cycle; basis index bit q is qubit q.
Eigen::MatrixXcd cycle_unitary(const Cycle& cy, int n);

// Dense X^x Z^z (phase-dropped form; exact under conjugation).
Eigen::MatrixXcd pauli_unitary(const PauliString& p);

// Exact output distribution of a canonical circuit under the model:
// preparation flips, slot 0, then per one-qubit cycle the unitary, its
// entangler and the following slot channel, measurement flips last.
Distribution noisy_output_distribution(const Circuit& c,
                                       const NoiseModel& model);

}  // namespace accred
