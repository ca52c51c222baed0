// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "accred/accredit.hpp"
#include "accred/circuit.hpp"
#include "accred/noise.hpp"
#include "accred/pauli.hpp"
#include "accred/statevector.hpp"

namespace accred {

// Half the L1 distance between two outcome distributions.
double variation_distance(const Distribution& a, const Distribution& b);

// Exact trap statistics by brute-force enumeration over every trap
// configuration (H/S choices and the conjugation bit, uniformly weighted),
// every fault pattern supported by the model, every preparation flip mask,
// with measurement flips resolved analytically. Guarded to n <= 3, m <= 3.
struct ExactTrapStats {
  double p_inc = 0.0;   // P(trap reports a non-zero word)
  double p_canc = 0.0;  // P(two or more locations fire, report still zero)
  double p_err = 0.0;   // P(at least one location fires)
  double c_bound = 0.0; // pair union bound over the location rates
};
ExactTrapStats exact_trap_stats(const Circuit& target, const NoiseModel& model);

// Probability, over the trap randomness, that one Pauli fault inserted at the
// given slot flips at least one output bit. Throws on identity faults.
double single_fault_detection(const Circuit& target, int slot,
                              const PauliString& fault);

// Minimum of single_fault_detection over every slot and every non-identity
// Pauli (n <= 3).
double min_single_fault_detection(const Circuit& target);

// Exact target-vs-ideal distance against twice the exact trap failure rate,
// the certificate the protocol estimates by sampling. Exact-oracle scale
// only.
struct VdBoundCheck {
  double vd = 0.0;
  double p_inc = 0.0;
  double bound = 0.0;  // 2 p_inc
  bool holds = false;  // vd <= bound + 1e-9
};
VdBoundCheck vd_vs_bound(const Circuit& target, const NoiseModel& model);

// Distance bound of the protocol variant that discards a run unless every
// trap reports correctly: eta(v) = kappa / ((v + 1)(1 - p_inc)^v) with
// kappa = 1.7, minimized over the trap count. eta is unimodal in v, so the
// scan stops at the first increase; ties resolve to the smaller v.
struct OverheadPoint {
  double eta = 0.0;
  int v = 0;
};
OverheadPoint discard_variant_bound(double p_inc, int v_cap = 1000000);

// "p_inc,eta_best,present_bound" rows; the present bound column is 2 p_inc.
std::string bounds_csv(const std::vector<double>& p_inc_values);

// Hamming-weight profile of sampled words against the per-bit binomial
// model. The flip rate is fitted by maximum likelihood (mean weight / n,
// exact for a binomial) unless a rate is supplied.
struct HammingDiagnostic {
  int n = 0;
  std::vector<double> empirical;  // index h = weight, size n + 1
  std::vector<double> model;
  double p_mle = 0.0;
  double p_model = 0.0;  // rate the model column was evaluated at
  double tv = 0.0;       // half L1 between the two columns
};
HammingDiagnostic hamming_diagnostic(const std::vector<uint64_t>& words,
                                     int n,
                                     std::optional<double> p_flip = {});
std::string hamming_csv(const HammingDiagnostic& d);

// One robustness check under gate-dependent noise at strength epsilon: the
// exact target variation distance against the exact-trap bound
// 2 p_inc + m epsilon.
struct RobustnessRow {
  double epsilon = 0.0;
  uint64_t seed = 0;
  double vd = 0.0;
  double bound = 0.0;
  bool holds = false;
};
RobustnessRow gate_dependence_robustness(const Circuit& target,
                                         const NoiseModel& base,
                                         double epsilon, uint64_t seed);
std::string robustness_csv(const std::vector<RobustnessRow>& rows);

}  // namespace accred
