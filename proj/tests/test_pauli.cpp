// SPDX-License-Identifier: MIT
#include <stdexcept>

#include "doctest.h"

#include "accred/pauli.hpp"

using accred::PauliString;
using accred::symplectic;

TEST_CASE("identity and weight") {
  PauliString id = PauliString::identity(5);
  CHECK(id.is_identity());
  CHECK(id.weight() == 0);
  PauliString p(5, 0b00101, 0b00110);
  // Qubit 0: X, qubit 1: Z, qubit 2: Y.
  CHECK(p.weight() == 3);
  CHECK(!p.is_identity());
}

TEST_CASE("component accessors round-trip") {
  PauliString p = PauliString::identity(4);
  p.set_component(0, 'X');
  p.set_component(1, 'Y');
  p.set_component(2, 'Z');
  p.set_component(3, 'I');
  CHECK(p.component(0) == 'X');
  CHECK(p.component(1) == 'Y');
  CHECK(p.component(2) == 'Z');
  CHECK(p.component(3) == 'I');
  p.set_component(1, 'I');
  CHECK(p.component(1) == 'I');
  CHECK(p.weight() == 2);
  CHECK_THROWS_AS(p.set_component(4, 'X'), std::invalid_argument);
  CHECK_THROWS_AS(p.set_component(0, 'Q'), std::invalid_argument);
}

TEST_CASE("product is componentwise with phases dropped") {
  PauliString a = PauliString::parse("X0Z1", 3);
  PauliString b = PauliString::parse("Z0Z1X2", 3);
  a.mul(b);
  // X*Z = Y (up to phase), Z*Z = I, I*X = X.
  CHECK(a == PauliString::parse("Y0X2", 3));
  PauliString c = PauliString::parse("Y1", 2);
  c.mul(c);
  CHECK(c.is_identity());
}

TEST_CASE("labels parse and print") {
  CHECK(PauliString::identity(3).label() == "I");
  PauliString p = PauliString::parse("X0Y3", 4);
  CHECK(p.component(0) == 'X');
  CHECK(p.component(3) == 'Y');
  CHECK(p.label() == "X0Y3");
  CHECK(PauliString::parse("I", 2) == PauliString::identity(2));
  CHECK(PauliString::parse(p.label(), 4) == p);
  CHECK_THROWS_AS(PauliString::parse("X9", 3), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("W0", 3), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("X", 3), std::invalid_argument);
}

TEST_CASE("symplectic parity detects anticommutation") {
  int n = 2;
  PauliString x0 = PauliString::parse("X0", n);
  PauliString z0 = PauliString::parse("Z0", n);
  PauliString y0 = PauliString::parse("Y0", n);
  PauliString z1 = PauliString::parse("Z1", n);
  CHECK(symplectic(x0, z0) == 1);
  CHECK(symplectic(x0, y0) == 1);
  CHECK(symplectic(y0, z0) == 1);
  CHECK(symplectic(x0, x0) == 0);
  CHECK(symplectic(x0, z1) == 0);
  // Two anticommuting single-qubit overlaps compose to commuting.
  PauliString xx = PauliString::parse("X0X1", n);
  PauliString zz = PauliString::parse("Z0Z1", n);
  CHECK(symplectic(xx, zz) == 0);
}
