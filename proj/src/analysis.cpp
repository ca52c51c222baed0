// SPDX-License-Identifier: MIT
#include "accred/analysis.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "accred/clifford.hpp"
#include "accred/density.hpp"

namespace accred {

namespace {

constexpr double kOverheadKappa = 1.7;

// Enumerates every trap configuration of the target: the per-cycle H/S
// choices (one bit per entangled pair, one per unpaired qubit) and the
// conjugation bit, all uniformly weighted.
void for_each_trap_config(
    const Circuit& target,
    const std::function<void(const TrapCircuit&, double)>& visit) {
  const int n = target.n;
  const int m = target.num_u_cycles();

  struct BitSite {
    int cycle;           // 1-based, < m
    int a, b;            // b < 0 for an unpaired qubit
  };
  std::vector<BitSite> sites;
  for (int j = 1; j <= m - 1; ++j) {
    uint64_t paired = 0;
    for (const auto& [a, b] : target.e_cycle(j).pairs) {
      sites.push_back({j, a, b});
      paired |= (uint64_t{1} << a) | (uint64_t{1} << b);
    }
    for (int q = 0; q < n; ++q) {
      if (!((paired >> q) & 1)) sites.push_back({j, q, -1});
    }
  }
  if (sites.size() > 20) {
    throw std::invalid_argument("too many trap choice bits to enumerate");
  }

  const uint64_t combos = uint64_t{1} << sites.size();
  const double weight = 1.0 / (2.0 * static_cast<double>(combos));
  for (uint64_t bits = 0; bits < combos; ++bits) {
    std::vector<std::string> hs(static_cast<size_t>(m > 0 ? m - 1 : 0),
                                std::string(static_cast<size_t>(n), 'H'));
    for (size_t s = 0; s < sites.size(); ++s) {
      const BitSite& site = sites[s];
      const int bit = static_cast<int>((bits >> s) & 1);
      std::string& row = hs[static_cast<size_t>(site.cycle - 1)];
      if (site.b < 0) {
        row[static_cast<size_t>(site.a)] = bit == 0 ? 'H' : 'S';
      } else if (bit == 0) {
        row[static_cast<size_t>(site.a)] = 'H';
        row[static_cast<size_t>(site.b)] = 'S';
      } else {
        row[static_cast<size_t>(site.a)] = 'S';
        row[static_cast<size_t>(site.b)] = 'H';
      }
    }
    for (int t = 0; t <= 1; ++t) {
      const TrapCircuit trap = assemble_trap(target, hs, t, {});
      visit(trap, weight);
    }
  }
}

void check_enumeration_scale(const Circuit& target) {
  if (target.n > 3 || target.num_u_cycles() > 3) {
    throw std::invalid_argument("instance too large for exact enumeration");
  }
}

double binomial_coefficient(int n, int h) {
  double c = 1.0;
  for (int i = 0; i < h; ++i) {
    c *= static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return c;
}

}  // namespace

double variation_distance(const Distribution& a, const Distribution& b) {
  if (a.n != b.n) throw std::invalid_argument("distribution width mismatch");
  double acc = 0.0;
  for (size_t i = 0; i < a.p.size(); ++i) acc += std::fabs(a.p[i] - b.p[i]);
  return 0.5 * acc;
}

ExactTrapStats exact_trap_stats(const Circuit& target,
                                const NoiseModel& model) {
  target.require_canonical();
  check_enumeration_scale(target);
  const int n = target.n;
  const int m = target.num_u_cycles();
  model.validate(n, m);

  ExactTrapStats stats;
  stats.p_err = p_err_total(model);
  stats.c_bound = cancellation_bound_C(model);

  double p_zero = 0.0;  // correct report
  double p_canc = 0.0;

  for_each_trap_config(target, [&](const TrapCircuit& trap, double weight) {
    // Slot noise may depend on the compiled (pre-pad) cycle content.
    std::vector<CyclePauliNoise> resolved(static_cast<size_t>(m) + 1);
    resolved[0] = model.slots[0];
    for (int j = 1; j <= m; ++j) {
      resolved[static_cast<size_t>(j)] =
          model.slot_for_cycle(j, trap.padless.u_cycle(j));
    }

    const SuffixTables tables(trap.core, trap.t_bit == 1);
    // Propagated X image of every slot entry, plus per-qubit preparation
    // flips; pattern images then compose by XOR.
    std::vector<std::vector<std::pair<uint64_t, double>>> options(
        static_cast<size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
      auto& opt = options[static_cast<size_t>(j)];
      const CyclePauliNoise& slot = resolved[static_cast<size_t>(j)];
      opt.emplace_back(uint64_t{0}, 1.0 - slot.q_tot());
      for (const auto& [p, rate] : slot.entries) {
        opt.emplace_back(tables.propagate(j, p).x, rate);
      }
    }
    std::vector<uint64_t> prep_image(static_cast<size_t>(n));
    for (int q = 0; q < n; ++q) {
      prep_image[static_cast<size_t>(q)] =
          tables.propagate_prep(PauliString(n, uint64_t{1} << q, 0)).x;
    }

    const uint64_t prep_masks =
        model.prep_flip > 0.0 ? (uint64_t{1} << n) : 1;
    for (uint64_t mask = 0; mask < prep_masks; ++mask) {
      const int flips = std::popcount(mask);
      double prep_prob = 1.0;
      uint64_t prep_x = 0;
      for (int q = 0; q < n; ++q) {
        if ((mask >> q) & 1) {
          prep_prob *= model.prep_flip;
          prep_x ^= prep_image[static_cast<size_t>(q)];
        } else {
          prep_prob *= 1.0 - model.prep_flip;
        }
      }

      // Depth-first product over the slot options.
      std::function<void(int, int, uint64_t, double)> walk =
          [&](int j, int fired, uint64_t x, double prob) {
            if (prob == 0.0) return;
            if (j > m) {
              // The report is all-zeros exactly when the measurement flips
              // hit precisely the flipped bits of the terminal image.
              const int need = std::popcount(x);
              const double zero_prob =
                  prob * std::pow(model.meas_flip, need) *
                  std::pow(1.0 - model.meas_flip, n - need);
              p_zero += weight * zero_prob;
              if (fired + need >= 2) p_canc += weight * zero_prob;
              return;
            }
            const auto& opts = options[static_cast<size_t>(j)];
            for (size_t i = 0; i < opts.size(); ++i) {
              // Index 0 is the identity draw; everything else fires the slot.
              walk(j + 1, fired + (i > 0 ? 1 : 0), x ^ opts[i].first,
                   prob * opts[i].second);
            }
          };
      walk(0, flips, prep_x, prep_prob);
    }
  });

  stats.p_inc = 1.0 - p_zero;
  stats.p_canc = p_canc;
  return stats;
}

double single_fault_detection(const Circuit& target, int slot,
                              const PauliString& fault) {
  target.require_canonical();
  const int m = target.num_u_cycles();
  if (slot < 0 || slot > m) throw std::invalid_argument("slot out of range");
  if (fault.is_identity()) {
    throw std::invalid_argument("identity fault has nothing to detect");
  }
  if (fault.n != target.n) {
    throw std::invalid_argument("fault width mismatch");
  }
  double detected = 0.0;
  for_each_trap_config(target, [&](const TrapCircuit& trap, double weight) {
    const SuffixTables tables(trap.core, trap.t_bit == 1);
    if (tables.propagate(slot, fault).x != 0) detected += weight;
  });
  return detected;
}

double min_single_fault_detection(const Circuit& target) {
  target.require_canonical();
  check_enumeration_scale(target);
  const int n = target.n;
  const int m = target.num_u_cycles();
  double lowest = 1.0;
  for (int slot = 0; slot <= m; ++slot) {
    for (uint64_t code = 1; code < (uint64_t{1} << (2 * n)); ++code) {
      const PauliString fault(n, code & ((uint64_t{1} << n) - 1),
                              code >> n);
      lowest = std::min(lowest, single_fault_detection(target, slot, fault));
    }
  }
  return lowest;
}

VdBoundCheck vd_vs_bound(const Circuit& target, const NoiseModel& model) {
  VdBoundCheck check;
  check.vd = variation_distance(noisy_output_distribution(target, model),
                                ideal_distribution(target));
  check.p_inc = exact_trap_stats(target, model).p_inc;
  check.bound = 2.0 * check.p_inc;
  check.holds = check.vd <= check.bound + 1e-9;
  return check;
}

OverheadPoint discard_variant_bound(double p_inc, int v_cap) {
  if (!(p_inc > 0.0) || !(p_inc < 1.0)) {
    throw std::invalid_argument("failure rate must be in (0, 1)");
  }
  if (v_cap < 1) throw std::invalid_argument("need at least one trap");
  OverheadPoint best;
  best.v = 0;
  best.eta = 0.0;
  double prev = 0.0;
  for (int v = 1; v <= v_cap; ++v) {
    const double eta =
        kOverheadKappa /
        (static_cast<double>(v + 1) * std::pow(1.0 - p_inc, v));
    if (best.v == 0 || eta < best.eta) {
      best.v = v;
      best.eta = eta;
    } else if (eta > prev) {
      break;  // past the minimum of a unimodal curve
    }
    prev = eta;
  }
  return best;
}

std::string bounds_csv(const std::vector<double>& p_inc_values) {
  std::string out = "p_inc,eta_best,present_bound\n";
  char line[128];
  for (double p : p_inc_values) {
    const OverheadPoint point = discard_variant_bound(p);
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g\n", p, point.eta,
                  2.0 * p);
    out += line;
  }
  return out;
}

HammingDiagnostic hamming_diagnostic(const std::vector<uint64_t>& words,
                                     int n, std::optional<double> p_flip) {
  if (n < 1 || n > 63) throw std::invalid_argument("width out of range");
  if (words.empty()) throw std::invalid_argument("no samples");
  if (p_flip && (*p_flip < 0.0 || *p_flip > 1.0)) {
    throw std::invalid_argument("flip rate out of range");
  }
  HammingDiagnostic d;
  d.n = n;
  d.empirical.assign(static_cast<size_t>(n) + 1, 0.0);
  const double w = 1.0 / static_cast<double>(words.size());
  double mean_weight = 0.0;
  for (uint64_t word : words) {
    const int h = std::popcount(word);
    d.empirical[static_cast<size_t>(h)] += w;
    mean_weight += w * h;
  }
  d.p_mle = mean_weight / n;
  d.p_model = p_flip.value_or(d.p_mle);
  d.model.assign(static_cast<size_t>(n) + 1, 0.0);
  d.tv = 0.0;
  for (int h = 0; h <= n; ++h) {
    d.model[static_cast<size_t>(h)] = binomial_coefficient(n, h) *
                                      std::pow(d.p_model, h) *
                                      std::pow(1.0 - d.p_model, n - h);
    d.tv += 0.5 * std::fabs(d.model[static_cast<size_t>(h)] -
                            d.empirical[static_cast<size_t>(h)]);
  }
  return d;
}

std::string hamming_csv(const HammingDiagnostic& d) {
  std::string out = "h,empirical,model\n";
  char line[128];
  for (int h = 0; h <= d.n; ++h) {
    std::snprintf(line, sizeof(line), "%d,%.17g,%.17g\n", h,
                  d.empirical[static_cast<size_t>(h)],
                  d.model[static_cast<size_t>(h)]);
    out += line;
  }
  return out;
}

RobustnessRow gate_dependence_robustness(const Circuit& target,
                                         const NoiseModel& base,
                                         double epsilon, uint64_t seed) {
  target.require_canonical();
  check_enumeration_scale(target);
  if (epsilon < 0.0) throw std::invalid_argument("negative strength");

  NoiseModel model = base;
  model.gate_dependence = GateDependence{epsilon, seed};

  RobustnessRow row;
  row.epsilon = epsilon;
  row.seed = seed;
  row.vd = variation_distance(noisy_output_distribution(target, model),
                              ideal_distribution(target));
  const ExactTrapStats stats = exact_trap_stats(target, model);
  row.bound = 2.0 * stats.p_inc +
              static_cast<double>(target.num_u_cycles()) * epsilon;
  row.holds = row.vd <= row.bound + 1e-12;
  return row;
}

std::string robustness_csv(const std::vector<RobustnessRow>& rows) {
  std::string out = "epsilon,seed,vd,two_p_inc,holds\n";
  char line[160];
  for (const RobustnessRow& row : rows) {
    std::snprintf(line, sizeof(line), "%.17g,%llu,%.17g,%.17g,%d\n",
                  row.epsilon, static_cast<unsigned long long>(row.seed),
                  row.vd, row.bound, row.holds ? 1 : 0);
    out += line;
  }
  return out;
}

}  // namespace accred
