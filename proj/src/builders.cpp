// SPDX-License-Identifier: MIT
#include "accred/builders.hpp"

#include <cmath>
#include <stdexcept>

#include "accred/rng.hpp"

namespace accred {

namespace {

EntanglingCycle cz_cycle(std::vector<std::pair<int, int>> pairs) {
  EntanglingCycle e;
  e.kind = EntanglerKind::CZ;
  e.pairs = std::move(pairs);
  e.normalize();
  return e;
}

Mat2 mat_rz(double theta) {
  Mat2 m;
  m.a = std::polar(1.0, -theta / 2.0);
  m.b = cplx{0.0};
  m.c = cplx{0.0};
  m.d = std::polar(1.0, theta / 2.0);
  return m;
}

Mat2 mat_rx(double theta) {
  double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  Mat2 m;
  m.a = cplx{c};
  m.b = cplx{0.0, -s};
  m.c = cplx{0.0, -s};
  m.d = cplx{c};
  return m;
}

Mat2 mat_h() {
  double r = 1.0 / std::sqrt(2.0);
  return Mat2{cplx{r}, cplx{r}, cplx{r}, cplx{-r}};
}

}  // namespace

Circuit build_ghz_layout(int n, const std::vector<EntanglingCycle>& topology) {
  if (n < 1) throw std::invalid_argument("build_ghz_layout: n must be >= 1");
  // Assemble in CX form (control already entangled, target fresh), then
  // recompile to the canonical CZ form.
  Circuit cx;
  cx.n = n;
  OneQubitCycle first = OneQubitCycle::identity(n);
  first.gates[0] = Gate1Q::h();
  cx.cycles.emplace_back(first);

  std::vector<char> reached(static_cast<size_t>(n), 0);
  reached[0] = 1;
  for (const auto& cyc : topology) {
    EntanglingCycle step;
    step.kind = EntanglerKind::CX;
    for (auto [a, b] : cyc.pairs) {
      if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
        throw std::invalid_argument("build_ghz_layout: bad pair in topology");
      }
      bool ra = reached[a], rb = reached[b];
      if (ra == rb) {
        throw std::invalid_argument(
            "build_ghz_layout: topology is not a spreading cascade (pair must "
            "join one entangled and one fresh qubit)");
      }
      int ctrl = ra ? a : b;
      int tgt = ra ? b : a;
      step.pairs.emplace_back(ctrl, tgt);
    }
    // Marking targets only after the whole cycle keeps pairs within one cycle
    // independent, matching a simultaneous layer of gates.
    for (auto [c, t] : step.pairs) {
      (void)c;
      reached[t] = 1;
    }
    cx.cycles.emplace_back(step);
  }
  for (int q = 0; q < n; ++q) {
    if (!reached[q]) {
      throw std::invalid_argument(
          "build_ghz_layout: topology does not reach every qubit");
    }
  }
  cx.cycles.emplace_back(OneQubitCycle::identity(n));
  Circuit out = recompile_cx_to_cz(cx);
  out.require_canonical();
  return out;
}

std::vector<EntanglingCycle> ghz_tree_topology(int n) {
  std::vector<EntanglingCycle> topo;
  int have = 1;
  while (have < n) {
    int grab = std::min(have, n - have);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < grab; ++i) pairs.emplace_back(i, have + i);
    topo.push_back(cz_cycle(std::move(pairs)));
    have += grab;
  }
  return topo;
}

std::vector<EntanglingCycle> ghz_chain_topology(int n) {
  std::vector<EntanglingCycle> topo;
  for (int q = 1; q < n; ++q) {
    topo.push_back(cz_cycle({{q - 1, q}}));
  }
  return topo;
}

Circuit build_qft_layout(int n) {
  if (n < 1) throw std::invalid_argument("build_qft_layout: n must be >= 1");
  const double pi = 3.14159265358979323846;
  if (n == 1) {
    // Preparation H followed by QFT = H merges to the identity.
    Circuit c;
    c.n = 1;
    c.cycles.emplace_back(OneQubitCycle::identity(1));
    std::get<OneQubitCycle>(c.cycles[0]).gates[0] =
        Gate1Q::h().compose_after(Gate1Q::h());
    c.require_canonical();
    return c;
  }

  const int layers = 2 * n - 3;
  const int m = 2 * layers + 1;
  std::vector<OneQubitCycle> ucyc(static_cast<size_t>(m),
                                  OneQubitCycle::identity(n));
  std::vector<EntanglingCycle> ecyc(static_cast<size_t>(m - 1));

  auto put = [&](int cycle1, int q, const Mat2& g) {
    auto& slot = ucyc[static_cast<size_t>(cycle1 - 1)].gates[q];
    slot = Gate1Q::from_matrix(g).compose_after(slot);
  };

  // Hadamard preparation of |+>^n, then the transform's own H on qubit 0.
  for (int q = 0; q < n; ++q) put(1, q, mat_h());
  put(1, 0, mat_h());
  // H_k for middle qubits sits in the idle cycle of commuting layer 2k.
  for (int k = 1; k <= n - 2; ++k) put(4 * k, k, mat_h());

  // Controlled-phase(pi / 2^(j-i)) between i and j runs in layer i + j; each
  // layer occupies cycles U(2L-1) E(2L-1) U(2L) E(2L) U(2L+1).
  for (int L = 1; L <= layers; ++L) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
      int j = L - i;
      if (j <= i || j > n - 1) continue;
      double phi = pi / std::pow(2.0, j - i);
      put(2 * L - 1, j, mat_h().mul(mat_rz(phi / 2.0)));
      put(2 * L, j, mat_rx(-phi / 2.0));
      put(2 * L + 1, i, mat_rz(phi / 2.0));
      put(2 * L + 1, j, mat_h());
      pairs.emplace_back(i, j);
    }
    EntanglingCycle e = cz_cycle(pairs);
    ecyc[static_cast<size_t>(2 * L - 2)] = e;
    ecyc[static_cast<size_t>(2 * L - 1)] = e;
  }
  put(m, n - 1, mat_h());

  Circuit c;
  c.n = n;
  for (int j = 0; j < m; ++j) {
    c.cycles.emplace_back(ucyc[static_cast<size_t>(j)]);
    if (j + 1 < m) c.cycles.emplace_back(ecyc[static_cast<size_t>(j)]);
  }
  c.require_canonical();
  return c;
}

Circuit build_random_layout(int n, int m, uint64_t seed,
                            const std::vector<EntanglingCycle>& pattern) {
  if (n < 1 || m < 1) {
    throw std::invalid_argument("build_random_layout: need n >= 1 and m >= 1");
  }
  if (static_cast<int>(pattern.size()) != m - 1) {
    throw std::invalid_argument(
        "build_random_layout: pattern must supply exactly m - 1 entangling "
        "cycles");
  }
  Rng rng(seed);
  Circuit c;
  c.n = n;
  for (int j = 0; j < m; ++j) {
    OneQubitCycle u;
    u.gates.reserve(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q) {
      // Haar measure on SU(2) modulo phase: column phases uniform, mixing
      // angle with sin^2 uniform.
      double psi = 2.0 * 3.14159265358979323846 * rng.uniform();
      double chi = 2.0 * 3.14159265358979323846 * rng.uniform();
      double theta = std::asin(std::sqrt(rng.uniform()));
      double ct = std::cos(theta), st = std::sin(theta);
      Mat2 u2;
      u2.a = std::polar(ct, psi);
      u2.b = std::polar(st, chi);
      u2.c = -std::polar(st, -chi);
      u2.d = std::polar(ct, -psi);
      u.gates.push_back(Gate1Q::generic(u2));
    }
    c.cycles.emplace_back(std::move(u));
    if (j + 1 < m) {
      EntanglingCycle e = pattern[static_cast<size_t>(j)];
      if (e.kind != EntanglerKind::CZ) {
        throw std::invalid_argument(
            "build_random_layout: pattern must use CZ cycles");
      }
      e.normalize();
      c.cycles.emplace_back(std::move(e));
    }
  }
  c.require_canonical();
  return c;
}

std::vector<EntanglingCycle> brick_pattern(int n, int m) {
  std::vector<EntanglingCycle> out;
  for (int j = 0; j < m - 1; ++j) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = j % 2; a + 1 < n; a += 2) pairs.emplace_back(a, a + 1);
    out.push_back(cz_cycle(std::move(pairs)));
  }
  return out;
}

}  // namespace accred
