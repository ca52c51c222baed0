// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <vector>

#include "accred/accredit.hpp"
#include "accred/noise.hpp"

namespace accred {

// Samples scheduled circuits under a stochastic-Pauli model. Slot j of the
// model is keyed on one-qubit cycle j of the pre-pad frame when gate
// dependence is configured. Traps run through Pauli propagation against
// their all-zeros ideal output; Clifford targets reuse a cached tableau;
// everything else falls back to dense evaluation memoized per fault pattern.
class SimulatedNoisyExecutor : public Executor {
 public:
  explicit SimulatedNoisyExecutor(NoiseModel model);
  std::vector<uint64_t> run(const ScheduledCircuit& sc, long shots,
                            uint64_t rng_seed) override;

 private:
  NoiseModel model_;
};

// Ideal device.
class NoiselessExecutor : public Executor {
 public:
  std::vector<uint64_t> run(const ScheduledCircuit& sc, long shots,
                            uint64_t rng_seed) override;
};

// Replays a fixed word list in schedule order; for protocol plumbing tests.
class PlaybackExecutor : public Executor {
 public:
  explicit PlaybackExecutor(std::vector<uint64_t> words);
  std::vector<uint64_t> run(const ScheduledCircuit& sc, long shots,
                            uint64_t rng_seed) override;

 private:
  std::vector<uint64_t> words_;
  size_t cursor_ = 0;
};

}  // namespace accred
