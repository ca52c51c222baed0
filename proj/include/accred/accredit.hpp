// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "accred/circuit.hpp"
#include "accred/pauli.hpp"
#include "accred/rng.hpp"

namespace accred {

// A generated trap. `circuit` is the executable form: trap core, conjugating
// Hadamard cycles folded in when t_bit is set, one-time-pad Paulis merged,
// fully Clifford and canonical. `core` keeps the bare trap cycles (no
// Hadamard wrap, no pad) for fault-frame analysis.
struct TrapCircuit {
  Circuit circuit;
  Circuit core;
  // Compiled form before the one-time pad (conjugating Hadamard cycles folded
  // in): the frame gate-dependent noise is keyed on.
  Circuit padless;
  int t_bit = 0;
  // hs_choices[j-1][q]: 'H' or 'S' selected for qubit q in cycle j (j < m).
  std::vector<std::string> hs_choices;
  // One-time-pad draws R_1..R_m (the final one is self-cancelling).
  std::vector<PauliString> qotp;
};

struct ProtocolParams {
  double theta = 0.0;
  double alpha = 0.0;
  int v = 0;  // 0 means derive from (theta, alpha)
  uint64_t rng_seed = 0;
  long target_shots = 1;
};

struct AccreditationReport {
  double theta = 0.0;
  double alpha = 0.0;
  int v = 0;
  int n_inc = 0;
  double bound_raw = 0.0;
  bool nontrivial = false;
  int target_position = 0;
  std::map<std::string, long> target_samples;
  std::vector<int> trap_outcomes;  // 1 = incorrect (non-zero output)

  nlohmann::ordered_json to_json() const;
  std::string summary() const;
};

// Ceiling of 2 ln(2 / (1 - alpha)) / theta^2, the Hoeffding trap count for
// accuracy theta at confidence alpha.
int required_traps(double theta, double alpha, int v_max = 1000000);

// Draws the H/S replacement for every entangled pair and unpaired qubit of
// each cycle j < m, undoes it after the entangling cycle, conjugates the
// whole circuit by Hadamard cycles when the random bit t is set, then applies
// the one-time-pad and merges. The construction checks that the result's
// noiseless output is all-zeros.
TrapCircuit generate_trap(const Circuit& target, Rng& rng);

// Deterministic assembly from explicit choices; generate_trap draws the
// choices and delegates here. hs_choices[j-1] must hold 'H' or 'S' for every
// qubit of cycle j. Pass an empty qotp for an identity pad.
TrapCircuit assemble_trap(const Circuit& target,
                          std::vector<std::string> hs_choices, int t_bit,
                          std::vector<PauliString> qotp);

// Random Pauli cycle after every one-qubit cycle plus the undo (conjugated
// through the intervening entangling cycle) before the next one, merged back
// to the input's cycle count. The ideal output distribution is unchanged.
Circuit apply_qotp(const Circuit& c, Rng& rng);
Circuit apply_qotp_with(const Circuit& c, const std::vector<PauliString>& draws);

// Executed-circuit record handed to executors. `trap` is null for the target
// slot; `pre_pad` is the merged circuit before one-time-padding (the frame
// that slot-anchored noise attaches to).
struct ScheduledCircuit {
  const Circuit* circuit = nullptr;
  const Circuit* pre_pad = nullptr;
  const TrapCircuit* trap = nullptr;
  int index = 0;  // schedule position
};

class Executor {
 public:
  virtual ~Executor() = default;
  // Returns `shots` outcome words. `rng_seed` is the per-circuit stream; two
  // calls with the same arguments must agree, so execution order of the
  // schedule cannot matter.
  virtual std::vector<uint64_t> run(const ScheduledCircuit& sc, long shots,
                                    uint64_t rng_seed) = 0;
};

// Runs the protocol: v one-time-padded traps plus the padded target at a
// uniformly random schedule position, one shot per trap,
// params.target_shots shots for the target.
AccreditationReport run_protocol(const Circuit& target,
                                 const ProtocolParams& params, Executor& exec);

}  // namespace accred
