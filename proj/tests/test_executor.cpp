// SPDX-License-Identifier: MIT
#include <cstdint>
#include <vector>

#include "doctest.h"

#include "accred/accredit.hpp"
#include "accred/builders.hpp"
#include "accred/executor.hpp"
#include "accred/noise.hpp"

using namespace accred;

namespace {

ScheduledCircuit trap_slot(const TrapCircuit& trap, int index = 0) {
  ScheduledCircuit sc;
  sc.circuit = &trap.circuit;
  sc.pre_pad = &trap.padless;
  sc.trap = &trap;
  sc.index = index;
  return sc;
}

ScheduledCircuit target_slot(const Circuit& padded, const Circuit& frame) {
  ScheduledCircuit sc;
  sc.circuit = &padded;
  sc.pre_pad = &frame;
  sc.index = 0;
  return sc;
}

}  // namespace

TEST_CASE("the noiseless executor reports all-zeros on traps") {
  Circuit target = build_ghz_layout(3, ghz_tree_topology(3));
  Rng rng(2);
  NoiselessExecutor exec;
  for (int i = 0; i < 30; ++i) {
    TrapCircuit trap = generate_trap(target, rng);
    auto words = exec.run(trap_slot(trap), 4, 55 + static_cast<uint64_t>(i));
    REQUIRE(words.size() == 4);
    for (uint64_t w : words) CHECK(w == 0);
  }
}

TEST_CASE("noisy executor runs are reproducible per seed") {
  Circuit target = build_ghz_layout(3, ghz_chain_topology(3));
  NoiseModel model = from_device_profile(DeviceProfile{0.02, 0.04, 0.03}, target);
  SimulatedNoisyExecutor exec(model);
  Rng rng(4);
  TrapCircuit trap = generate_trap(target, rng);
  auto a = exec.run(trap_slot(trap), 64, 99);
  auto b = exec.run(trap_slot(trap), 64, 99);
  CHECK(a == b);
  auto c = exec.run(trap_slot(trap), 64, 100);
  CHECK(a != c);
}

TEST_CASE("a certain measurement-stage flip is caught by half the traps") {
  // Deterministic X on qubit 0 right before measurement: traps without the
  // conjugating Hadamard layer report it, traps with it see a harmless Z.
  Circuit target = build_ghz_layout(2, ghz_tree_topology(2));
  NoiseModel model = NoiseModel::noiseless(2, target.num_u_cycles());
  model.slots.back().add(PauliString::parse("X0", 2), 1.0);
  SimulatedNoisyExecutor exec(model);
  Rng rng(8);
  int flagged = 0;
  const int reps = 400;
  for (int i = 0; i < reps; ++i) {
    TrapCircuit trap = generate_trap(target, rng);
    auto words = exec.run(trap_slot(trap), 1, 2000 + static_cast<uint64_t>(i));
    bool caught = words[0] != 0;
    CHECK(caught == (trap.t_bit == 0));
    if (caught) ++flagged;
  }
  CHECK(flagged > reps / 2 - 60);
  CHECK(flagged < reps / 2 + 60);
}

TEST_CASE("trap and target paths see the same noise statistics") {
  // A trap's compiled circuit is itself a Clifford circuit, so running it
  // through the target path must give the same failure rate as the dedicated
  // trap path.
  Circuit target = build_ghz_layout(2, ghz_tree_topology(2));
  NoiseModel model = from_device_profile(DeviceProfile{0.05, 0.1, 0.04}, target);
  SimulatedNoisyExecutor exec(model);
  Rng rng(9);
  TrapCircuit trap = generate_trap(target, rng);

  const long shots = 40000;
  auto trap_words = exec.run(trap_slot(trap), shots, 7);
  auto target_words = exec.run(target_slot(trap.circuit, trap.padless), shots, 8);
  double trap_bad = 0.0, target_bad = 0.0;
  for (long i = 0; i < shots; ++i) {
    if (trap_words[static_cast<size_t>(i)] != 0) trap_bad += 1.0;
    if (target_words[static_cast<size_t>(i)] != 0) target_bad += 1.0;
  }
  trap_bad /= static_cast<double>(shots);
  target_bad /= static_cast<double>(shots);
  CHECK(trap_bad == doctest::Approx(target_bad).epsilon(0.08));
}

TEST_CASE("playback hands out words in schedule order") {
  PlaybackExecutor exec({5, 6, 7});
  Circuit c = build_ghz_layout(2, ghz_tree_topology(2));
  ScheduledCircuit sc = target_slot(c, c);
  auto first = exec.run(sc, 2, 0);
  CHECK(first == std::vector<uint64_t>{5, 6});
  auto second = exec.run(sc, 1, 0);
  CHECK(second == std::vector<uint64_t>{7});
  CHECK_THROWS_AS(exec.run(sc, 1, 0), std::out_of_range);
}
