// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "accred/rng.hpp"

namespace accred {

// Kraus representation of a channel on k qubits (operators are 2^k square).
using KrausOps = std::vector<Eigen::MatrixXcd>;

// Width cap for the dense channel checks below.
inline constexpr int kTwirlCap = 3;

// Throws unless sum K^dagger K = I within tol.
void validate_cptp(const KrausOps& kraus, int k, double tol = 1e-10);

Eigen::MatrixXcd apply_kraus_ops(const KrausOps& kraus,
                                 const Eigen::MatrixXcd& rho);

// Dense Pauli with true phases (Y carries +-i). Index is base 4 with digit
// order I, X, Y, Z; qubit 0 is the least significant digit.
Eigen::MatrixXcd pauli_matrix_dense(int k, int idx);

// 1 when the two indexed Paulis anticommute.
int pauli_anticommute(int k, int a, int b);

// Pauli transfer matrix R[a][b] = Tr[P_a E(P_b)] / 2^k. Real for any
// hermiticity-preserving map.
Eigen::MatrixXd pauli_transfer_matrix(const KrausOps& kraus, int k);

struct TwirlCheck {
  Eigen::MatrixXd ptm;          // input channel
  Eigen::MatrixXd twirled_ptm;  // explicit average over the 4^k Pauli frame
  std::vector<double> q;        // error rates recovered from ptm's diagonal
  double max_offdiag = 0.0;     // of twirled_ptm
  double min_q = 0.0;
  double sum_q = 0.0;
};

// Conjugates the channel by every Pauli frame element, averages, and reports
// both the resulting transfer matrix and the Pauli error rates implied by the
// original diagonal. For a CPTP input the average must be a Pauli channel:
// twirled_ptm diagonal, q a probability vector, and the two routes agree.
TwirlCheck twirl_check(const KrausOps& kraus, int k);

// Kraus form of the Pauli channel with the given 4^k rates.
KrausOps pauli_channel_kraus(int k, const std::vector<double>& q);

// Random CPTP channel: complex Gaussian operators normalized through the
// inverse square root of their completeness sum.
KrausOps random_cptp(int k, int num_kraus, uint64_t seed);

}  // namespace accred
