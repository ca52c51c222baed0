// SPDX-License-Identifier: MIT
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "doctest.h"

#include "accred/builders.hpp"
#include "accred/statevector.hpp"

using namespace accred;

TEST_CASE("two-qubit entangled-pair layout has the expected gate structure") {
  Circuit c = build_ghz_layout(2, ghz_tree_topology(2));
  REQUIRE(c.canonical_form());
  REQUIRE(c.num_u_cycles() == 2);
  // First cycle H on both qubits, entangler CZ(0,1), last cycle I then H:
  // the compiled form of H(0) followed by CX(0 -> 1).
  CHECK(std::string(c.u_cycle(1).gates[0].name()) == "H");
  CHECK(std::string(c.u_cycle(1).gates[1].name()) == "H");
  REQUIRE(c.e_cycle(1).pairs.size() == 1);
  CHECK(c.e_cycle(1).pairs[0] == std::pair<int, int>(0, 1));
  CHECK(std::string(c.u_cycle(2).gates[0].name()) == "I");
  CHECK(std::string(c.u_cycle(2).gates[1].name()) == "H");
}

TEST_CASE("cascade layouts prepare an even superposition of the two extremes") {
  for (int n : {2, 3, 6, 10}) {
    for (auto topo : {ghz_tree_topology(n), ghz_chain_topology(n)}) {
      Circuit c = build_ghz_layout(n, topo);
      REQUIRE(c.canonical_form());
      Distribution d = ideal_distribution(c);
      uint64_t all = (uint64_t{1} << n) - 1;
      CHECK(d.p[0] == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(d.p[all] == doctest::Approx(0.5).epsilon(1e-12));
    }
  }
}

TEST_CASE("doubling cascade reaches ten qubits with pair counts 1,2,4,2") {
  auto topo = ghz_tree_topology(10);
  REQUIRE(topo.size() == 4);
  CHECK(topo[0].pairs.size() == 1);
  CHECK(topo[1].pairs.size() == 2);
  CHECK(topo[2].pairs.size() == 4);
  CHECK(topo[3].pairs.size() == 2);
  // Chain topology: one fresh qubit per step.
  auto chain = ghz_chain_topology(5);
  REQUIRE(chain.size() == 4);
  for (const auto& e : chain) CHECK(e.pairs.size() == 1);
}

TEST_CASE("cascade validation rejects topologies that touch fresh pairs") {
  // (1,2) entangles two qubits neither of which is reached from qubit 0.
  EntanglingCycle bad;
  bad.kind = EntanglerKind::CX;
  bad.pairs = {{1, 2}};
  CHECK_THROWS_AS(build_ghz_layout(3, {bad}), std::invalid_argument);
  // A topology that never reaches qubit 2.
  EntanglingCycle first;
  first.kind = EntanglerKind::CX;
  first.pairs = {{0, 1}};
  CHECK_THROWS_AS(build_ghz_layout(3, {first}), std::invalid_argument);
}

TEST_CASE("Fourier layout undoes the uniform superposition") {
  for (int n : {2, 3, 4}) {
    Circuit c = build_qft_layout(n);
    REQUIRE(c.canonical_form());
    CHECK(c.num_u_cycles() == 4 * n - 5);
    Distribution d = ideal_distribution(c);
    CHECK(d.p[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(!c.fully_clifford());
  }
}

TEST_CASE("random layouts are deterministic in the seed") {
  auto pattern = brick_pattern(3, 4);
  Circuit a = build_random_layout(3, 4, 99, pattern);
  Circuit b = build_random_layout(3, 4, 99, pattern);
  Circuit c = build_random_layout(3, 4, 100, pattern);
  REQUIRE(a.canonical_form());
  CHECK(a.num_u_cycles() == 4);
  StateVector va(3), vb(3), vc(3);
  va.apply_circuit(a);
  vb.apply_circuit(b);
  vc.apply_circuit(c);
  double same = 0.0, diff = 0.0;
  for (uint64_t i = 0; i < 8; ++i) {
    same = std::max(same, std::abs(va.amp(i) - vb.amp(i)));
    diff = std::max(diff, std::abs(va.amp(i) - vc.amp(i)));
  }
  CHECK(same == 0.0);
  CHECK(diff > 1e-3);
}

TEST_CASE("brick pattern alternates pair offsets") {
  auto p = brick_pattern(4, 3);
  REQUIRE(p.size() == 2);
  CHECK(p[0].pairs == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  CHECK(p[1].pairs == std::vector<std::pair<int, int>>{{1, 2}});
}
