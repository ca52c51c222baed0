// SPDX-License-Identifier: MIT
#include "accred/statevector.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <utility>

#include "accred/clifford.hpp"
#include "accred/noise.hpp"

namespace accred {

Distribution Distribution::zeros(int n) {
  Distribution d;
  d.n = n;
  d.p.assign(uint64_t{1} << n, 0.0);
  return d;
}

double Distribution::total() const {
  double t = 0.0;
  for (double v : p) t += v;
  return t;
}

void Distribution::validate(double tol) const {
  if (p.size() != (uint64_t{1} << n)) {
    throw std::logic_error("distribution size mismatch");
  }
  for (double v : p) {
    if (!(v >= -tol)) throw std::logic_error("negative probability");
  }
  if (std::fabs(total() - 1.0) > tol) {
    throw std::logic_error("distribution not normalized");
  }
}

StateVector::StateVector(int n) : n_(n) {
  if (n < 1 || n > kStatevectorCap) {
    throw std::invalid_argument("statevector width out of range");
  }
  a_.assign(uint64_t{1} << n, cplx{0.0, 0.0});
  a_[0] = cplx{1.0, 0.0};
}

void StateVector::apply_gate(const Mat2& u, int q) {
  const uint64_t bit = uint64_t{1} << q;
  const uint64_t size = a_.size();
  for (uint64_t idx = 0; idx < size; ++idx) {
    if (idx & bit) continue;
    const cplx lo = a_[idx];
    const cplx hi = a_[idx | bit];
    a_[idx] = u.a * lo + u.b * hi;
    a_[idx | bit] = u.c * lo + u.d * hi;
  }
}

void StateVector::apply_cycle(const Cycle& cy) {
  if (is_u1(cy)) {
    const auto& u1 = std::get<OneQubitCycle>(cy);
    for (int q = 0; q < n_; ++q) {
      const Gate1Q& g = u1.gates[static_cast<size_t>(q)];
      if (!g.is_identity()) apply_gate(g.u, q);
    }
    return;
  }
  const auto& ent = std::get<EntanglingCycle>(cy);
  const uint64_t size = a_.size();
  for (const auto& [a, b] : ent.pairs) {
    const uint64_t abit = uint64_t{1} << a;
    const uint64_t bbit = uint64_t{1} << b;
    if (ent.kind == EntanglerKind::CZ) {
      for (uint64_t idx = 0; idx < size; ++idx) {
        if ((idx & abit) && (idx & bbit)) a_[idx] = -a_[idx];
      }
    } else {
      for (uint64_t idx = 0; idx < size; ++idx) {
        if ((idx & abit) && !(idx & bbit)) std::swap(a_[idx], a_[idx | bbit]);
      }
    }
  }
}

void StateVector::apply_circuit(const Circuit& c) {
  if (c.n != n_) throw std::invalid_argument("circuit width mismatch");
  c.validate();
  for (const auto& cy : c.cycles) {
    apply_cycle(cy);
    if (std::fabs(norm() - 1.0) > 1e-10) {
      throw std::logic_error("state norm drifted during evolution");
    }
  }
}

void StateVector::apply_pauli(const PauliString& p) {
  if (p.n != n_) throw std::invalid_argument("pauli width mismatch");
  // X^x Z^z with the global phase of any Y factors dropped; measurement
  // statistics are unaffected.
  const uint64_t size = a_.size();
  std::vector<cplx> out(size);
  for (uint64_t idx = 0; idx < size; ++idx) {
    const double sign =
        (std::popcount(idx & p.z) & 1) != 0 ? -1.0 : 1.0;
    out[idx ^ p.x] = sign * a_[idx];
  }
  a_ = std::move(out);
}

double StateVector::norm() const {
  double t = 0.0;
  for (const cplx& v : a_) t += std::norm(v);
  return t;
}

Distribution StateVector::distribution() const {
  Distribution d = Distribution::zeros(n_);
  for (uint64_t idx = 0; idx < a_.size(); ++idx) d.p[idx] = std::norm(a_[idx]);
  return d;
}

Distribution ideal_distribution(const Circuit& c) {
  if (c.n > kStatevectorCap) {
    throw std::invalid_argument("circuit too wide for dense evaluation");
  }
  StateVector sv(c.n);
  sv.apply_circuit(c);
  Distribution d = sv.distribution();
  d.validate();
  return d;
}

uint64_t sample_distribution(const Distribution& d, Rng& rng) {
  double u = rng.uniform();
  const uint64_t size = d.p.size();
  for (uint64_t idx = 0; idx < size; ++idx) {
    u -= d.p[idx];
    if (u < 0.0) return idx;
  }
  return size - 1;
}

Distribution faulted_distribution(const Circuit& c, uint64_t prep_mask,
                                  const std::vector<PauliString>& slots) {
  c.require_canonical();
  if (c.n > kStatevectorCap) {
    throw std::invalid_argument("circuit too wide for dense evaluation");
  }
  const int n = c.n;
  const int m = c.num_u_cycles();
  if (static_cast<int>(slots.size()) != m + 1) {
    throw std::invalid_argument("fault slot count mismatch");
  }
  StateVector sv(n);
  if (prep_mask != 0) sv.apply_pauli(PauliString(n, prep_mask, 0));
  if (!slots[0].is_identity()) sv.apply_pauli(slots[0]);
  for (int j = 1; j <= m; ++j) {
    sv.apply_cycle(Cycle{c.u_cycle(j)});
    if (j < m) sv.apply_cycle(Cycle{c.e_cycle(j)});
    if (!slots[static_cast<size_t>(j)].is_identity()) {
      sv.apply_pauli(slots[static_cast<size_t>(j)]);
    }
  }
  return sv.distribution();
}

std::vector<uint64_t> sample_noisy(const Circuit& c, const NoiseModel& model,
                                   long shots, Rng& rng) {
  c.require_canonical();
  const int n = c.n;
  const int m = c.num_u_cycles();
  model.validate(n, m);

  // Resolve per-slot distributions once; slot j is keyed on one-qubit cycle j
  // when a gate-dependent perturbation is configured.
  std::vector<CyclePauliNoise> resolved(static_cast<size_t>(m) + 1);
  resolved[0] = model.slots[0];
  for (int j = 1; j <= m; ++j) {
    resolved[static_cast<size_t>(j)] = model.slot_for_cycle(j, c.u_cycle(j));
  }

  const bool clifford = c.fully_clifford();
  std::unique_ptr<SuffixTables> tables;
  std::unique_ptr<StabilizerTableau> base;
  if (clifford) {
    tables = std::make_unique<SuffixTables>(c, false);
    base = std::make_unique<StabilizerTableau>(n);
    base->apply_circuit(c);
  } else if (n > kStatevectorCap) {
    throw std::invalid_argument("circuit too wide for dense evaluation");
  }
  std::map<std::vector<uint64_t>, Distribution> memo;

  std::vector<uint64_t> out;
  out.reserve(static_cast<size_t>(shots < 0 ? 0 : shots));
  FaultPattern pattern = FaultPattern::identity(n, m);
  for (long shot = 0; shot < shots; ++shot) {
    uint64_t prep_mask = 0;
    for (int q = 0; q < n; ++q) {
      if (rng.bernoulli(model.prep_flip)) prep_mask |= uint64_t{1} << q;
    }
    for (int j = 0; j <= m; ++j) {
      pattern.slots[static_cast<size_t>(j)] =
          resolved[static_cast<size_t>(j)].sample(n, rng);
    }
    uint64_t meas_mask = 0;
    for (int q = 0; q < n; ++q) {
      if (rng.bernoulli(model.meas_flip)) meas_mask |= uint64_t{1} << q;
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
                          faulted_distribution(c, prep_mask, pattern.slots))
                 .first;
      }
      word = sample_distribution(it->second, rng);
    }
    out.push_back(word ^ meas_mask);
  }
  return out;
}

Distribution empirical_distribution(const std::vector<uint64_t>& samples,
                                    int n) {
  Distribution d = Distribution::zeros(n);
  if (samples.empty()) return d;
  const double w = 1.0 / static_cast<double>(samples.size());
  for (uint64_t s : samples) d.p[s] += w;
  return d;
}

}  // namespace accred
