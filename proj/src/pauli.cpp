// SPDX-License-Identifier: MIT
#include "accred/pauli.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace accred {

PauliString::PauliString(int n_qubits, uint64_t x_mask, uint64_t z_mask)
    : n(n_qubits), x(x_mask), z(z_mask) {
  if (n_qubits < 1 || n_qubits > 63) {
    throw std::invalid_argument("PauliString: qubit count out of range");
  }
  uint64_t lim = (uint64_t{1} << n_qubits) - 1;
  if ((x_mask | z_mask) & ~lim) {
    throw std::invalid_argument("PauliString: mask exceeds qubit count");
  }
}

int PauliString::weight() const {
  return std::popcount(x | z);
}

void PauliString::mul(const PauliString& o) {
  if (o.n != n) throw std::invalid_argument("PauliString: size mismatch");
  x ^= o.x;
  z ^= o.z;
}

char PauliString::component(int q) const {
  bool bx = (x >> q) & 1, bz = (z >> q) & 1;
  if (bx && bz) return 'Y';
  if (bx) return 'X';
  if (bz) return 'Z';
  return 'I';
}

void PauliString::set_component(int q, char p) {
  if (q < 0 || q >= n) throw std::invalid_argument("PauliString: bad qubit");
  uint64_t bit = uint64_t{1} << q;
  x &= ~bit;
  z &= ~bit;
  switch (p) {
    case 'I': break;
    case 'X': x |= bit; break;
    case 'Y': x |= bit; z |= bit; break;
    case 'Z': z |= bit; break;
    default: throw std::invalid_argument("PauliString: bad component letter");
  }
}

std::string PauliString::label() const {
  if (is_identity()) return "I";
  std::string out;
  for (int q = 0; q < n; ++q) {
    char c = component(q);
    if (c == 'I') continue;
    out += c;
    out += std::to_string(q);
  }
  return out;
}

PauliString PauliString::parse(const std::string& label, int n_qubits) {
  PauliString p = PauliString::identity(n_qubits);
  if (label == "I" || label.empty()) return p;
  size_t i = 0;
  while (i < label.size()) {
    char c = label[i];
    if (c != 'X' && c != 'Y' && c != 'Z' && c != 'I') {
      throw std::invalid_argument("PauliString: bad letter in label '" + label +
                                  "'");
    }
    ++i;
    size_t start = i;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) {
      ++i;
    }
    if (start == i) {
      throw std::invalid_argument("PauliString: missing qubit index in '" +
                                  label + "'");
    }
    int q = std::stoi(label.substr(start, i - start));
    if (q < 0 || q >= n_qubits) {
      throw std::invalid_argument("PauliString: qubit index out of range in '" +
                                  label + "'");
    }
    if (c != 'I') p.set_component(q, c);
  }
  return p;
}

int symplectic(const PauliString& a, const PauliString& b) {
  if (a.n != b.n) throw std::invalid_argument("symplectic: size mismatch");
  return (std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1;
}

}  // namespace accred
