// SPDX-License-Identifier: MIT
#include "accred/executor.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <utility>

#include "accred/clifford.hpp"
#include "accred/statevector.hpp"

namespace accred {

SimulatedNoisyExecutor::SimulatedNoisyExecutor(NoiseModel model)
    : model_(std::move(model)) {}

std::vector<uint64_t> SimulatedNoisyExecutor::run(const ScheduledCircuit& sc,
                                                  long shots,
                                                  uint64_t rng_seed) {
  if (sc.pre_pad == nullptr || sc.circuit == nullptr) {
    throw std::invalid_argument("scheduled circuit is incomplete");
  }
  const Circuit& frame = *sc.pre_pad;
  frame.require_canonical();
  const int n = frame.n;
  const int m = frame.num_u_cycles();
  model_.validate(n, m);

  std::vector<CyclePauliNoise> resolved(static_cast<size_t>(m) + 1);
  resolved[0] = model_.slots[0];
  for (int j = 1; j <= m; ++j) {
    resolved[static_cast<size_t>(j)] =
        model_.slot_for_cycle(j, frame.u_cycle(j));
  }

  Rng rng(rng_seed);
  std::vector<uint64_t> out;
  out.reserve(static_cast<size_t>(shots < 0 ? 0 : shots));
  FaultPattern pattern = FaultPattern::identity(n, m);

  if (sc.trap != nullptr) {
    // One-time-pad gates conjugate every Pauli fault to the same phaseless
    // Pauli, so trap statistics are computed in the unpadded frame: terminal
    // fault image against the deterministic all-zeros output.
    SuffixTables tables(sc.trap->core, sc.trap->t_bit == 1);
    for (long shot = 0; shot < shots; ++shot) {
      uint64_t prep_mask = 0;
      for (int q = 0; q < n; ++q) {
        if (rng.bernoulli(model_.prep_flip)) prep_mask |= uint64_t{1} << q;
      }
      for (int j = 0; j <= m; ++j) {
        pattern.slots[static_cast<size_t>(j)] =
            resolved[static_cast<size_t>(j)].sample(n, rng);
      }
      uint64_t meas_mask = 0;
      for (int q = 0; q < n; ++q) {
        if (rng.bernoulli(model_.meas_flip)) meas_mask |= uint64_t{1} << q;
      }
      PauliString terminal = tables.merge(pattern);
      if (prep_mask != 0) {
        terminal.mul(tables.propagate_prep(PauliString(n, prep_mask, 0)));
      }
      out.push_back(terminal.x ^ meas_mask);
    }
    return out;
  }

  const bool clifford = frame.fully_clifford();
  std::unique_ptr<SuffixTables> tables;
  std::unique_ptr<StabilizerTableau> base;
  if (clifford) {
    tables = std::make_unique<SuffixTables>(frame, false);
    base = std::make_unique<StabilizerTableau>(n);
    base->apply_circuit(frame);
  }
  std::map<std::vector<uint64_t>, Distribution> memo;
  for (long shot = 0; shot < shots; ++shot) {
    uint64_t prep_mask = 0;
    for (int q = 0; q < n; ++q) {
      if (rng.bernoulli(model_.prep_flip)) prep_mask |= uint64_t{1} << q;
    }
    for (int j = 0; j <= m; ++j) {
      pattern.slots[static_cast<size_t>(j)] =
          resolved[static_cast<size_t>(j)].sample(n, rng);
    }
    uint64_t meas_mask = 0;
    for (int q = 0; q < n; ++q) {
      if (rng.bernoulli(model_.meas_flip)) meas_mask |= uint64_t{1} << q;
    }
    uint64_t word;
    if (clifford) {
      PauliString terminal = tables->merge(pattern);
      if (prep_mask != 0) {
        terminal.mul(tables->propagate_prep(PauliString(n, prep_mask, 0)));
      }
      StabilizerTableau tab = *base;
      word = tab.measure_all(rng) ^ terminal.x;
    } else {
      std::vector<uint64_t> key;
      key.reserve(2 * (static_cast<size_t>(m) + 1) + 1);
      key.push_back(prep_mask);
      for (const auto& p : pattern.slots) {
        key.push_back(p.x);
        key.push_back(p.z);
      }
      auto it = memo.find(key);
      if (it == memo.end()) {
        it = memo.emplace(std::move(key),
                          faulted_distribution(frame, prep_mask,
                                               pattern.slots))
                 .first;
      }
      word = sample_distribution(it->second, rng);
    }
    out.push_back(word ^ meas_mask);
  }
  return out;
}

std::vector<uint64_t> NoiselessExecutor::run(const ScheduledCircuit& sc,
                                             long shots, uint64_t rng_seed) {
  if (sc.circuit == nullptr) {
    throw std::invalid_argument("scheduled circuit is incomplete");
  }
  const Circuit& c = *sc.circuit;
  c.require_canonical();
  Rng rng(rng_seed);
  std::vector<uint64_t> out;
  out.reserve(static_cast<size_t>(shots < 0 ? 0 : shots));
  if (c.fully_clifford()) {
    StabilizerTableau base(c.n);
    base.apply_circuit(c);
    for (long shot = 0; shot < shots; ++shot) {
      StabilizerTableau tab = base;
      out.push_back(tab.measure_all(rng));
    }
    return out;
  }
  const Distribution d = ideal_distribution(c);
  for (long shot = 0; shot < shots; ++shot) {
    out.push_back(sample_distribution(d, rng));
  }
  return out;
}

PlaybackExecutor::PlaybackExecutor(std::vector<uint64_t> words)
    : words_(std::move(words)) {}

std::vector<uint64_t> PlaybackExecutor::run(const ScheduledCircuit& sc,
                                            long shots, uint64_t rng_seed) {
  (void)sc;
  (void)rng_seed;
  std::vector<uint64_t> out;
  out.reserve(static_cast<size_t>(shots < 0 ? 0 : shots));
  for (long shot = 0; shot < shots; ++shot) {
    if (cursor_ >= words_.size()) {
      throw std::out_of_range("playback word list exhausted");
    }
    out.push_back(words_[cursor_++]);
  }
  return out;
}

}  // namespace accred
