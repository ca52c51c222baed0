// SPDX-License-Identifier: MIT
#include "accred/noise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "accred/serialize.hpp"

namespace accred {

double CyclePauliNoise::q_tot() const {
  double total = 0.0;
  for (const auto& [p, rate] : entries) {
    (void)p;
    total += rate;
  }
  return total;
}

void CyclePauliNoise::validate() const {
  double total = 0.0;
  for (const auto& [p, rate] : entries) {
    if (!(rate >= 0.0)) throw std::invalid_argument("negative noise rate");
    if (p.weight() == 0) {
      throw std::invalid_argument("identity entry in noise slot");
    }
    total += rate;
  }
  if (total > 1.0 + 1e-12) {
    throw std::invalid_argument("noise slot rates sum above one");
  }
}

void CyclePauliNoise::add(const PauliString& p, double rate) {
  entries.emplace_back(p, rate);
}

PauliString CyclePauliNoise::sample(int n, Rng& rng) const {
  double u = rng.uniform();
  for (const auto& [p, rate] : entries) {
    if (u < rate) return p;
    u -= rate;
  }
  return PauliString::identity(n);
}

bool NoiseModel::trivial() const {
  if (prep_flip != 0.0 || meas_flip != 0.0) return false;
  for (const auto& slot : slots) {
    if (slot.q_tot() != 0.0) return false;
  }
  return true;
}

void NoiseModel::validate(int circuit_n, int circuit_m) const {
  if (n != circuit_n) throw std::invalid_argument("noise model width mismatch");
  if (static_cast<int>(slots.size()) != circuit_m + 1) {
    throw std::invalid_argument("noise model slot count mismatch");
  }
  for (const auto& slot : slots) {
    slot.validate();
    for (const auto& [p, rate] : slot.entries) {
      (void)rate;
      if (p.n != n) throw std::invalid_argument("noise entry width mismatch");
    }
  }
  if (prep_flip < 0.0 || prep_flip > 1.0 || meas_flip < 0.0 ||
      meas_flip > 1.0) {
    throw std::invalid_argument("flip probability out of range");
  }
  if (gate_dependence && gate_dependence->epsilon < 0.0) {
    throw std::invalid_argument("negative gate dependence strength");
  }
}

CyclePauliNoise NoiseModel::slot_for_cycle(int slot,
                                           const OneQubitCycle& cycle) const {
  const CyclePauliNoise& base = slots.at(static_cast<size_t>(slot));
  if (!gate_dependence || slot == 0) return base;
  return gate_dependent_variant(base, gate_dependence->epsilon,
                                gate_dependence->seed, cycle);
}

NoiseModel NoiseModel::noiseless(int n, int m) {
  NoiseModel model;
  model.n = n;
  model.slots.resize(static_cast<size_t>(m) + 1);
  return model;
}

NoiseModel from_device_profile(const DeviceProfile& profile, const Circuit& c) {
  c.require_canonical();
  if (profile.rate_1q < 0.0 || profile.rate_2q < 0.0 ||
      profile.rate_meas < 0.0) {
    throw std::invalid_argument("negative device rate");
  }
  const int n = c.n;
  const int m = c.num_u_cycles();
  NoiseModel model = NoiseModel::noiseless(n, m);

  // Slot j collects the faults of one-qubit cycle j and of entangling cycle j
  // (the entangler that immediately follows it); the last one-qubit cycle has
  // no entangler, so its slot carries only the one-qubit mass.
  const char letters[4] = {'I', 'X', 'Y', 'Z'};
  for (int j = 1; j <= m; ++j) {
    CyclePauliNoise& slot = model.slots[static_cast<size_t>(j)];
    if (profile.rate_1q > 0.0) {
      const double each = profile.rate_1q / (3.0 * n);
      for (int q = 0; q < n; ++q) {
        for (int code = 1; code <= 3; ++code) {
          PauliString p = PauliString::identity(n);
          p.set_component(q, letters[code]);
          slot.add(p, each);
        }
      }
    }
    if (j < m && profile.rate_2q > 0.0) {
      const double each = profile.rate_2q / 15.0;
      for (const auto& [a, b] : c.e_cycle(j).pairs) {
        for (int ca = 0; ca <= 3; ++ca) {
          for (int cb = 0; cb <= 3; ++cb) {
            if (ca == 0 && cb == 0) continue;
            PauliString p = PauliString::identity(n);
            p.set_component(a, letters[ca]);
            p.set_component(b, letters[cb]);
            slot.add(p, each);
          }
        }
      }
    }
  }
  model.meas_flip = profile.rate_meas;
  model.validate(n, m);
  return model;
}

uint64_t cycle_content_hash(const OneQubitCycle& cycle) {
  Circuit one;
  one.n = static_cast<int>(cycle.gates.size());
  one.cycles.emplace_back(cycle);
  const std::string text = circuit_to_json_string(one);
  uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

CyclePauliNoise gate_dependent_variant(const CyclePauliNoise& base,
                                       double epsilon, uint64_t seed,
                                       const OneQubitCycle& cycle) {
  if (epsilon <= 0.0 || base.entries.empty()) return base;
  Rng rng = Rng::substream(seed, cycle_content_hash(cycle));
  const size_t k = base.entries.size();
  std::vector<double> jitter(k);
  for (size_t i = 0; i < k; ++i) jitter[i] = 2.0 * rng.uniform() - 1.0;

  // The identity mass absorbs the signed sum of the rate changes, so the
  // total variation from the base distribution is
  //   s/2 * (sum_i q_i |d_i| + |sum_i q_i d_i|).
  double abs_term = 0.0;
  double signed_term = 0.0;
  for (size_t i = 0; i < k; ++i) {
    abs_term += base.entries[i].second * std::fabs(jitter[i]);
    signed_term += base.entries[i].second * jitter[i];
  }
  const double unit_tv = 0.5 * (abs_term + std::fabs(signed_term));
  if (unit_tv <= 0.0) return base;
  double scale = std::min(1.0, epsilon / unit_tv);
  // Keep the perturbed rates a valid sub-distribution.
  const double headroom = 1.0 - base.q_tot();
  if (signed_term > 0.0 && scale * signed_term > headroom) {
    scale = headroom / signed_term;
  }

  CyclePauliNoise out;
  out.entries.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    const auto& [p, rate] = base.entries[i];
    out.add(p, rate * (1.0 + scale * jitter[i]));
  }
  out.validate();
  return out;
}

double p_err_total(const NoiseModel& model) {
  double survive = 1.0;
  for (const auto& slot : model.slots) survive *= 1.0 - slot.q_tot();
  survive *= std::pow(1.0 - model.prep_flip, model.n);
  survive *= std::pow(1.0 - model.meas_flip, model.n);
  return 1.0 - survive;
}

std::vector<double> location_rates(const NoiseModel& model) {
  std::vector<double> rates;
  rates.reserve(model.slots.size() + 2);
  for (const auto& slot : model.slots) rates.push_back(slot.q_tot());
  if (model.exact_flip_rates) {
    rates.push_back(1.0 - std::pow(1.0 - model.prep_flip, model.n));
    rates.push_back(1.0 - std::pow(1.0 - model.meas_flip, model.n));
  } else {
    rates.push_back(model.n * model.prep_flip);
    rates.push_back(model.n * model.meas_flip);
  }
  return rates;
}

double cancellation_bound_C(const std::vector<double>& rates) {
  double bound = 0.0;
  double prefix = 0.0;
  for (double r : rates) {
    if (r < 0.0) throw std::invalid_argument("negative location rate");
    bound += r * prefix;
    prefix += r;
  }
  return bound;
}

double cancellation_bound_C(const NoiseModel& model) {
  return cancellation_bound_C(location_rates(model));
}

}  // namespace accred
