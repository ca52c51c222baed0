// SPDX-License-Identifier: MIT
#include "accred/clifford.hpp"

#include <bit>
#include <stdexcept>

#include "accred/accredit.hpp"

namespace accred {

namespace {

// (x, z) component bits of the Pauli with table index 1 = X, 2 = Y, 3 = Z.
constexpr int kPx[4] = {0, 1, 1, 0};
constexpr int kPz[4] = {0, 0, 1, 1};

}  // namespace

PauliString conjugate_gate(const Gate1Q& g, int qubit, const PauliString& p) {
  if (!g.is_clifford()) {
    throw std::invalid_argument(
        "conjugate_gate: generic gate; the propagation engine is "
        "Clifford-only");
  }
  const auto& t = CliffordTable::instance();
  int bx = static_cast<int>((p.x >> qubit) & 1);
  int bz = static_cast<int>((p.z >> qubit) & 1);
  int nx = 0, nz = 0;
  if (bx) {
    int img = t.conj_pauli(g.cl, 1);
    nx ^= kPx[img];
    nz ^= kPz[img];
  }
  if (bz) {
    int img = t.conj_pauli(g.cl, 3);
    nx ^= kPx[img];
    nz ^= kPz[img];
  }
  PauliString out = p;
  uint64_t bit = uint64_t{1} << qubit;
  out.x = (out.x & ~bit) | (nx ? bit : 0);
  out.z = (out.z & ~bit) | (nz ? bit : 0);
  return out;
}

PauliString conjugate_cycle(const Cycle& cy, const PauliString& p) {
  PauliString out = p;
  if (is_u1(cy)) {
    const auto& u = std::get<OneQubitCycle>(cy);
    for (int q = 0; q < static_cast<int>(u.gates.size()); ++q) {
      out = conjugate_gate(u.gates[static_cast<size_t>(q)], q, out);
    }
    return out;
  }
  const auto& e = std::get<EntanglingCycle>(cy);
  if (e.kind == EntanglerKind::CZ) {
    for (auto [a, b] : e.pairs) {
      uint64_t ba = uint64_t{1} << a, bb = uint64_t{1} << b;
      uint64_t x = out.x;
      if (x & ba) out.z ^= bb;
      if (x & bb) out.z ^= ba;
    }
  } else {
    for (auto [c, t] : e.pairs) {
      uint64_t bc = uint64_t{1} << c, bt = uint64_t{1} << t;
      if (out.x & bc) out.x ^= bt;
      if (out.z & bt) out.z ^= bc;
    }
  }
  return out;
}

FaultPattern FaultPattern::identity(int n, int m) {
  FaultPattern f;
  f.slots.assign(static_cast<size_t>(m) + 1, PauliString::identity(n));
  return f;
}

bool FaultPattern::is_identity() const {
  for (const auto& s : slots) {
    if (!s.is_identity()) return false;
  }
  return true;
}

int FaultPattern::active_slots() const {
  int k = 0;
  for (const auto& s : slots) {
    if (!s.is_identity()) ++k;
  }
  return k;
}

SuffixTables::SuffixTables(const Circuit& canonical, bool conj_h) {
  canonical.require_canonical();
  if (!canonical.fully_clifford()) {
    throw std::invalid_argument("SuffixTables: circuit must be fully Clifford");
  }
  n_ = canonical.n;
  m_ = canonical.num_u_cycles();

  std::vector<PauliString> table(2 * static_cast<size_t>(n_));
  auto basis = [&](int q, int b) {
    PauliString p = PauliString::identity(n_);
    if (b == 0) {
      p.x = uint64_t{1} << q;
    } else {
      p.z = uint64_t{1} << q;
    }
    return p;
  };
  for (int q = 0; q < n_; ++q) {
    table[2 * static_cast<size_t>(q)] = basis(q, 0);
    table[2 * static_cast<size_t>(q) + 1] = basis(q, 1);
  }

  auto apply_table = [&](const std::vector<PauliString>& t,
                         const PauliString& p) {
    PauliString out = PauliString::identity(n_);
    for (int q = 0; q < n_; ++q) {
      if ((p.x >> q) & 1) out.mul(t[2 * static_cast<size_t>(q)]);
      if ((p.z >> q) & 1) out.mul(t[2 * static_cast<size_t>(q) + 1]);
    }
    return out;
  };
  auto push_cycle = [&](const Cycle& cy) {
    std::vector<PauliString> next(table.size());
    for (int q = 0; q < n_; ++q) {
      for (int b = 0; b < 2; ++b) {
        next[2 * static_cast<size_t>(q) + static_cast<size_t>(b)] =
            apply_table(table, conjugate_cycle(cy, basis(q, b)));
      }
    }
    table = std::move(next);
  };

  OneQubitCycle hall;
  hall.gates.assign(static_cast<size_t>(n_), Gate1Q::h());
  Cycle hall_cycle{hall};

  images_.assign(static_cast<size_t>(m_) + 1, {});
  if (conj_h) push_cycle(hall_cycle);
  images_[static_cast<size_t>(m_)] = table;
  // Walk the circuit backward; the boundary just before one-qubit cycle
  // U_(j+1) is exactly fault slot j (cycles[2j] is U_(j+1), cycles[2j-1] is
  // the entangling cycle E_j).
  for (int j = m_ - 1; j >= 0; --j) {
    push_cycle(canonical.cycles[2 * static_cast<size_t>(j)]);
    images_[static_cast<size_t>(j)] = table;
    if (j >= 1) push_cycle(canonical.cycles[2 * static_cast<size_t>(j) - 1]);
  }
  if (conj_h) push_cycle(hall_cycle);
  prep_images_ = table;
}

PauliString SuffixTables::propagate(int slot, const PauliString& p) const {
  if (slot < 0 || slot > m_) {
    throw std::invalid_argument("SuffixTables: slot out of range");
  }
  const auto& t = images_[static_cast<size_t>(slot)];
  PauliString out = PauliString::identity(n_);
  for (int q = 0; q < n_; ++q) {
    if ((p.x >> q) & 1) out.mul(t[2 * static_cast<size_t>(q)]);
    if ((p.z >> q) & 1) out.mul(t[2 * static_cast<size_t>(q) + 1]);
  }
  return out;
}

PauliString SuffixTables::propagate_prep(const PauliString& p) const {
  PauliString out = PauliString::identity(n_);
  for (int q = 0; q < n_; ++q) {
    if ((p.x >> q) & 1) out.mul(prep_images_[2 * static_cast<size_t>(q)]);
    if ((p.z >> q) & 1) out.mul(prep_images_[2 * static_cast<size_t>(q) + 1]);
  }
  return out;
}

PauliString SuffixTables::merge(const FaultPattern& pattern) const {
  if (static_cast<int>(pattern.slots.size()) != m_ + 1) {
    throw std::invalid_argument(
        "SuffixTables: pattern length must be m + 1 slots");
  }
  PauliString out = PauliString::identity(n_);
  for (int j = 0; j <= m_; ++j) {
    const auto& p = pattern.slots[static_cast<size_t>(j)];
    if (p.is_identity()) continue;
    if (p.n != n_) {
      throw std::invalid_argument("SuffixTables: pattern width mismatch");
    }
    out.mul(propagate(j, p));
  }
  return out;
}

PauliString merge_fault_pattern(const Circuit& c, const FaultPattern& pattern) {
  SuffixTables tables(c, /*conj_h=*/false);
  return tables.merge(pattern);
}

uint64_t trap_output_under_fault(const TrapCircuit& trap,
                                 const FaultPattern& pattern) {
  SuffixTables tables(trap.core, trap.t_bit == 1);
  return tables.merge(pattern).x;
}

StabilizerTableau::StabilizerTableau(int n) : n_(n) {
  if (n < 1 || n > 63) {
    throw std::invalid_argument("StabilizerTableau: qubit count out of range");
  }
  size_t rows = 2 * static_cast<size_t>(n) + 1;
  x_.assign(rows, 0);
  z_.assign(rows, 0);
  r_.assign(rows, 0);
  for (int i = 0; i < n; ++i) {
    x_[static_cast<size_t>(i)] = uint64_t{1} << i;
    z_[static_cast<size_t>(n) + static_cast<size_t>(i)] = uint64_t{1} << i;
  }
}

void StabilizerTableau::apply_h(int q) {
  uint64_t bit = uint64_t{1} << q;
  for (size_t i = 0; i < x_.size() - 1; ++i) {
    uint64_t xb = x_[i] & bit, zb = z_[i] & bit;
    if (xb && zb) r_[i] ^= 1;
    x_[i] = (x_[i] & ~bit) | zb;
    z_[i] = (z_[i] & ~bit) | xb;
  }
}

void StabilizerTableau::apply_s(int q) {
  uint64_t bit = uint64_t{1} << q;
  for (size_t i = 0; i < x_.size() - 1; ++i) {
    uint64_t xb = x_[i] & bit, zb = z_[i] & bit;
    if (xb && zb) r_[i] ^= 1;
    if (xb) z_[i] ^= bit;
  }
}

void StabilizerTableau::apply_cx(int control, int target) {
  uint64_t bc = uint64_t{1} << control, bt = uint64_t{1} << target;
  for (size_t i = 0; i < x_.size() - 1; ++i) {
    int xc = (x_[i] & bc) != 0, zc = (z_[i] & bc) != 0;
    int xt = (x_[i] & bt) != 0, zt = (z_[i] & bt) != 0;
    if (xc && zt && (xt ^ zc ^ 1)) r_[i] ^= 1;
    if (xc) x_[i] ^= bt;
    if (zt) z_[i] ^= bc;
  }
}

void StabilizerTableau::apply_cz(int a, int b) {
  apply_h(b);
  apply_cx(a, b);
  apply_h(b);
}

void StabilizerTableau::apply_gate(const Gate1Q& g, int q) {
  if (!g.is_clifford()) {
    throw std::invalid_argument(
        "StabilizerTableau: generic gate; engine is Clifford-only");
  }
  for (char c : CliffordTable::instance().word(g.cl)) {
    if (c == 'h') {
      apply_h(q);
    } else {
      apply_s(q);
    }
  }
}

void StabilizerTableau::apply_cycle(const Cycle& cy) {
  if (is_u1(cy)) {
    const auto& u = std::get<OneQubitCycle>(cy);
    for (int q = 0; q < static_cast<int>(u.gates.size()); ++q) {
      apply_gate(u.gates[static_cast<size_t>(q)], q);
    }
    return;
  }
  const auto& e = std::get<EntanglingCycle>(cy);
  for (auto [a, b] : e.pairs) {
    if (e.kind == EntanglerKind::CZ) {
      apply_cz(a, b);
    } else {
      apply_cx(a, b);
    }
  }
}

void StabilizerTableau::apply_circuit(const Circuit& c) {
  if (c.n != n_) {
    throw std::invalid_argument("StabilizerTableau: circuit width mismatch");
  }
  c.validate();
  for (const auto& cy : c.cycles) apply_cycle(cy);
}

void StabilizerTableau::apply_pauli(const PauliString& p) {
  for (size_t i = 0; i < x_.size() - 1; ++i) {
    // Conjugating by X flips rows anticommuting with X (those with Z there);
    // likewise for Z. Y is the composition.
    int flips = std::popcount(p.x & z_[i]) + std::popcount(p.z & x_[i]);
    if (flips & 1) r_[i] ^= 1;
  }
}

void StabilizerTableau::rowsum(int h, int i) {
  size_t sh = static_cast<size_t>(h), si = static_cast<size_t>(i);
  int sum = 2 * r_[sh] + 2 * r_[si];
  for (int q = 0; q < n_; ++q) {
    int x1 = (x_[si] >> q) & 1, z1 = (z_[si] >> q) & 1;
    int x2 = (x_[sh] >> q) & 1, z2 = (z_[sh] >> q) & 1;
    if (x1 && z1) {
      sum += z2 - x2;
    } else if (x1) {
      sum += z2 * (2 * x2 - 1);
    } else if (z1) {
      sum += x2 * (1 - 2 * z2);
    }
  }
  sum %= 4;
  if (sum < 0) sum += 4;
  r_[sh] = static_cast<uint8_t>(sum / 2);
  x_[sh] ^= x_[si];
  z_[sh] ^= z_[si];
}

int StabilizerTableau::measure_z(int q, Rng& rng) {
  uint64_t bit = uint64_t{1} << q;
  int p = -1;
  for (int i = n_; i < 2 * n_; ++i) {
    if (x_[static_cast<size_t>(i)] & bit) {
      p = i;
      break;
    }
  }
  if (p >= 0) {
    for (int i = 0; i < 2 * n_; ++i) {
      if (i != p && (x_[static_cast<size_t>(i)] & bit)) rowsum(i, p);
    }
    size_t sp = static_cast<size_t>(p), sd = static_cast<size_t>(p - n_);
    x_[sd] = x_[sp];
    z_[sd] = z_[sp];
    r_[sd] = r_[sp];
    int k = rng.bit();
    x_[sp] = 0;
    z_[sp] = bit;
    r_[sp] = static_cast<uint8_t>(k);
    return k;
  }
  size_t scratch = x_.size() - 1;
  x_[scratch] = 0;
  z_[scratch] = 0;
  r_[scratch] = 0;
  for (int i = 0; i < n_; ++i) {
    if (x_[static_cast<size_t>(i)] & bit) {
      rowsum(static_cast<int>(scratch), i + n_);
    }
  }
  return r_[scratch];
}

uint64_t StabilizerTableau::measure_all(Rng& rng) {
  uint64_t out = 0;
  for (int q = 0; q < n_; ++q) {
    out |= static_cast<uint64_t>(measure_z(q, rng)) << q;
  }
  return out;
}

uint64_t stabilizer_simulate(const Circuit& c, Rng& rng) {
  if (!c.fully_clifford()) {
    throw std::invalid_argument(
        "stabilizer_simulate: circuit has generic gates; use the statevector "
        "engine");
  }
  StabilizerTableau tab(c.n);
  tab.apply_circuit(c);
  return tab.measure_all(rng);
}

}  // namespace accred
