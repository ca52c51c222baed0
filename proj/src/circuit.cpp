// SPDX-License-Identifier: MIT
#include "accred/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace accred {

OneQubitCycle OneQubitCycle::identity(int n) {
  OneQubitCycle c;
  c.gates.assign(static_cast<size_t>(n), Gate1Q::id());
  return c;
}

bool OneQubitCycle::all_clifford() const {
  for (const auto& g : gates) {
    if (!g.is_clifford()) return false;
  }
  return true;
}

bool OneQubitCycle::is_identity() const {
  for (const auto& g : gates) {
    if (!g.is_identity()) return false;
  }
  return true;
}

void EntanglingCycle::normalize() {
  if (kind == EntanglerKind::CZ) {
    for (auto& p : pairs) {
      if (p.first > p.second) std::swap(p.first, p.second);
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return std::min(a.first, a.second) < std::min(b.first, b.second);
  });
}

void Circuit::validate() const {
  if (n < 1 || n > 63) {
    throw std::invalid_argument("Circuit: qubit count out of range");
  }
  for (const auto& cy : cycles) {
    if (is_u1(cy)) {
      const auto& u = std::get<OneQubitCycle>(cy);
      if (static_cast<int>(u.gates.size()) != n) {
        throw std::invalid_argument("Circuit: one-qubit cycle has wrong width");
      }
    } else {
      const auto& e = std::get<EntanglingCycle>(cy);
      uint64_t used = 0;
      for (const auto& [a, b] : e.pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
          throw std::invalid_argument("Circuit: bad entangler pair");
        }
        uint64_t mask = (uint64_t{1} << a) | (uint64_t{1} << b);
        if (used & mask) {
          throw std::invalid_argument(
              "Circuit: entangler pairs share a qubit within a cycle");
        }
        used |= mask;
      }
    }
  }
}

bool Circuit::canonical_form() const {
  if (cycles.empty()) return false;
  for (size_t i = 0; i < cycles.size(); ++i) {
    bool want_u1 = (i % 2 == 0);
    if (is_u1(cycles[i]) != want_u1) return false;
    if (!want_u1 &&
        std::get<EntanglingCycle>(cycles[i]).kind != EntanglerKind::CZ) {
      return false;
    }
  }
  return is_u1(cycles.back());
}

void Circuit::require_canonical() const {
  validate();
  if (!canonical_form()) {
    throw std::invalid_argument(
        "Circuit: canonical alternating form required (merge and recompile "
        "first)");
  }
}

int Circuit::num_u_cycles() const {
  int m = 0;
  for (const auto& cy : cycles) {
    if (is_u1(cy)) ++m;
  }
  return m;
}

const OneQubitCycle& Circuit::u_cycle(int j) const {
  return std::get<OneQubitCycle>(cycles.at(2 * (static_cast<size_t>(j) - 1)));
}

const EntanglingCycle& Circuit::e_cycle(int j) const {
  return std::get<EntanglingCycle>(cycles.at(2 * static_cast<size_t>(j) - 1));
}

OneQubitCycle& Circuit::u_cycle_mut(int j) {
  return std::get<OneQubitCycle>(cycles.at(2 * (static_cast<size_t>(j) - 1)));
}

bool Circuit::fully_clifford() const {
  for (const auto& cy : cycles) {
    if (is_u1(cy) && !std::get<OneQubitCycle>(cy).all_clifford()) return false;
  }
  return true;
}

Circuit merge_adjacent_1q_cycles(const Circuit& c) {
  c.validate();
  Circuit out;
  out.n = c.n;
  for (const auto& cy : c.cycles) {
    if (is_u1(cy) && !out.cycles.empty() && is_u1(out.cycles.back())) {
      auto& acc = std::get<OneQubitCycle>(out.cycles.back());
      const auto& add = std::get<OneQubitCycle>(cy);
      for (int q = 0; q < c.n; ++q) {
        acc.gates[q] = add.gates[q].compose_after(acc.gates[q]);
      }
    } else {
      out.cycles.push_back(cy);
    }
  }
  return out;
}

Circuit recompile_cx_to_cz(const Circuit& c) {
  c.validate();
  Circuit expanded;
  expanded.n = c.n;
  for (const auto& cy : c.cycles) {
    if (is_u1(cy) || std::get<EntanglingCycle>(cy).kind == EntanglerKind::CZ) {
      expanded.cycles.push_back(cy);
      continue;
    }
    const auto& e = std::get<EntanglingCycle>(cy);
    OneQubitCycle wrap = OneQubitCycle::identity(c.n);
    for (const auto& [ctrl, tgt] : e.pairs) {
      (void)ctrl;
      wrap.gates[tgt] = Gate1Q::h();
    }
    EntanglingCycle cz;
    cz.kind = EntanglerKind::CZ;
    cz.pairs = e.pairs;
    cz.normalize();
    expanded.cycles.push_back(wrap);
    expanded.cycles.push_back(cz);
    expanded.cycles.push_back(wrap);
  }
  return merge_adjacent_1q_cycles(expanded);
}

}  // namespace accred
