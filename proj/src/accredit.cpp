// SPDX-License-Identifier: MIT
#include "accred/accredit.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "accred/clifford.hpp"
#include "accred/serialize.hpp"

namespace accred {

namespace {

Gate1Q pauli_gate(char p) {
  switch (p) {
    case 'I': return Gate1Q::id();
    case 'X': return Gate1Q::x();
    case 'Y': return Gate1Q::y();
    case 'Z': return Gate1Q::z();
    default: throw std::logic_error("bad pauli letter");
  }
}

Gate1Q undo_gate(char choice) {
  return choice == 'H' ? Gate1Q::h() : Gate1Q::sdg();
}

Gate1Q choice_gate(char choice) {
  return choice == 'H' ? Gate1Q::h() : Gate1Q::s();
}

PauliString draw_pauli(int n, Rng& rng) {
  PauliString p = PauliString::identity(n);
  for (int q = 0; q < n; ++q) {
    if (rng.bit()) p.x |= uint64_t{1} << q;
    if (rng.bit()) p.z |= uint64_t{1} << q;
  }
  return p;
}

}  // namespace

int required_traps(double theta, double alpha, int v_max) {
  if (!(theta > 0.0) || theta > 1.0) {
    throw std::invalid_argument("accuracy must be in (0, 1]");
  }
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::invalid_argument("confidence must be in (0, 1)");
  }
  const double v = std::ceil(2.0 * std::log(2.0 / (1.0 - alpha)) /
                             (theta * theta));
  if (!(v <= static_cast<double>(v_max))) {
    throw std::invalid_argument("trap count exceeds the configured cap");
  }
  return static_cast<int>(v);
}

TrapCircuit generate_trap(const Circuit& target, Rng& rng) {
  target.require_canonical();
  const int n = target.n;
  const int m = target.num_u_cycles();

  std::vector<std::string> hs_choices;
  hs_choices.reserve(static_cast<size_t>(m > 0 ? m - 1 : 0));
  for (int j = 1; j <= m - 1; ++j) {
    std::string choices(static_cast<size_t>(n), 0);
    uint64_t paired = 0;
    for (const auto& [a, b] : target.e_cycle(j).pairs) {
      // One bit decides which side of the pair blocks the entangler in the
      // computational basis (S) and which probes it in the plus basis (H).
      if (rng.bit() == 0) {
        choices[static_cast<size_t>(a)] = 'H';
        choices[static_cast<size_t>(b)] = 'S';
      } else {
        choices[static_cast<size_t>(a)] = 'S';
        choices[static_cast<size_t>(b)] = 'H';
      }
      paired |= (uint64_t{1} << a) | (uint64_t{1} << b);
    }
    for (int q = 0; q < n; ++q) {
      if ((paired >> q) & 1) continue;
      choices[static_cast<size_t>(q)] = rng.bit() == 0 ? 'H' : 'S';
    }
    hs_choices.push_back(std::move(choices));
  }
  const int t_bit = rng.bit();
  std::vector<PauliString> qotp;
  qotp.reserve(static_cast<size_t>(m));
  for (int j = 1; j <= m; ++j) qotp.push_back(draw_pauli(n, rng));
  return assemble_trap(target, std::move(hs_choices), t_bit, std::move(qotp));
}

TrapCircuit assemble_trap(const Circuit& target,
                          std::vector<std::string> hs_choices, int t_bit,
                          std::vector<PauliString> qotp) {
  target.require_canonical();
  const int n = target.n;
  const int m = target.num_u_cycles();
  if (t_bit != 0 && t_bit != 1) {
    throw std::invalid_argument("conjugation bit must be 0 or 1");
  }
  if (static_cast<int>(hs_choices.size()) != m - 1) {
    throw std::invalid_argument("choice cycle count mismatch");
  }
  for (const auto& choices : hs_choices) {
    if (static_cast<int>(choices.size()) != n) {
      throw std::invalid_argument("choice width mismatch");
    }
    for (char c : choices) {
      if (c != 'H' && c != 'S') {
        throw std::invalid_argument("choices must be H or S");
      }
    }
  }
  if (qotp.empty()) {
    for (int j = 1; j <= m; ++j) qotp.push_back(PauliString::identity(n));
  }

  TrapCircuit trap;
  trap.hs_choices = std::move(hs_choices);
  trap.t_bit = t_bit;
  trap.qotp = std::move(qotp);

  // Core: each band applies its H/S choices, the entangler, and the inverse
  // choices; adjacent inverse and next-band cycles are merged, so cycle j
  // carries choices_j composed after the undo of choices_(j-1).
  trap.core.n = n;
  for (int j = 1; j <= m; ++j) {
    OneQubitCycle w = OneQubitCycle::identity(n);
    for (int q = 0; q < n; ++q) {
      Gate1Q g = Gate1Q::id();
      if (j > 1) g = undo_gate(trap.hs_choices[static_cast<size_t>(j - 2)]
                                              [static_cast<size_t>(q)]);
      if (j < m) {
        g = choice_gate(trap.hs_choices[static_cast<size_t>(j - 1)]
                                       [static_cast<size_t>(q)])
                .compose_after(g);
      }
      w.gates[static_cast<size_t>(q)] = g;
    }
    trap.core.cycles.emplace_back(std::move(w));
    if (j < m) trap.core.cycles.emplace_back(target.e_cycle(j));
  }
  trap.core.require_canonical();

  trap.padless = trap.core;
  if (trap.t_bit == 1) {
    OneQubitCycle& first = trap.padless.u_cycle_mut(1);
    OneQubitCycle& last = trap.padless.u_cycle_mut(m);
    for (int q = 0; q < n; ++q) {
      first.gates[static_cast<size_t>(q)] =
          first.gates[static_cast<size_t>(q)].compose_after(Gate1Q::h());
      last.gates[static_cast<size_t>(q)] =
          Gate1Q::h().compose_after(last.gates[static_cast<size_t>(q)]);
    }
  }

  trap.circuit = apply_qotp_with(trap.padless, trap.qotp);
  Rng check(0);
  if (stabilizer_simulate(trap.circuit, check) != 0) {
    throw std::logic_error("trap does not report all-zeros noiselessly");
  }
  return trap;
}

Circuit apply_qotp_with(const Circuit& c,
                        const std::vector<PauliString>& draws) {
  c.require_canonical();
  const int n = c.n;
  const int m = c.num_u_cycles();
  if (static_cast<int>(draws.size()) != m) {
    throw std::invalid_argument("pad draw count mismatch");
  }
  for (const auto& p : draws) {
    if (p.n != n) throw std::invalid_argument("pad width mismatch");
  }

  Circuit out = c;
  // Pad j goes after one-qubit cycle j; its copy conjugated through the
  // entangling cycle cancels it at the start of cycle j + 1. The last pad is
  // immediately followed by its own inverse, so it never appears merged.
  for (int j = 1; j <= m - 1; ++j) {
    const PauliString& pad = draws[static_cast<size_t>(j - 1)];
    const PauliString undo =
        conjugate_cycle(Cycle{c.e_cycle(j)}, pad);
    OneQubitCycle& here = out.u_cycle_mut(j);
    OneQubitCycle& next = out.u_cycle_mut(j + 1);
    for (int q = 0; q < n; ++q) {
      here.gates[static_cast<size_t>(q)] =
          pauli_gate(pad.component(q))
              .compose_after(here.gates[static_cast<size_t>(q)]);
      next.gates[static_cast<size_t>(q)] =
          next.gates[static_cast<size_t>(q)]
              .compose_after(pauli_gate(undo.component(q)));
    }
  }
  out.require_canonical();
  return out;
}

Circuit apply_qotp(const Circuit& c, Rng& rng) {
  c.require_canonical();
  std::vector<PauliString> draws;
  const int m = c.num_u_cycles();
  draws.reserve(static_cast<size_t>(m));
  for (int j = 1; j <= m; ++j) draws.push_back(draw_pauli(c.n, rng));
  return apply_qotp_with(c, draws);
}

nlohmann::ordered_json AccreditationReport::to_json() const {
  nlohmann::ordered_json j;
  j["theta"] = theta;
  j["alpha"] = alpha;
  j["v"] = v;
  j["n_inc"] = n_inc;
  j["bound"] = bound_raw;
  j["nontrivial"] = nontrivial;
  j["target_position"] = target_position;
  nlohmann::ordered_json samples = nlohmann::ordered_json::object();
  for (const auto& [bits, count] : target_samples) samples[bits] = count;
  j["target_samples"] = samples;
  j["trap_outcomes"] = trap_outcomes;
  return j;
}

std::string AccreditationReport::summary() const {
  char line[256];
  std::string out;
  std::snprintf(line, sizeof(line),
                "traps: %d, incorrect: %d (rate %.6f)\n", v, n_inc,
                v > 0 ? static_cast<double>(n_inc) / v : 0.0);
  out += line;
  std::snprintf(line, sizeof(line),
                "variation distance bound: %.6f at confidence %.4f (theta "
                "%.4f), %s\n",
                bound_raw, alpha, theta,
                nontrivial ? "nontrivial" : "trivial");
  out += line;
  std::snprintf(line, sizeof(line), "target position: %d\n", target_position);
  out += line;
  return out;
}

AccreditationReport run_protocol(const Circuit& target,
                                 const ProtocolParams& params,
                                 Executor& exec) {
  target.require_canonical();
  if (!(params.theta > 0.0) || params.theta > 1.0) {
    throw std::invalid_argument("accuracy must be in (0, 1]");
  }
  if (!(params.alpha > 0.0) || !(params.alpha < 1.0)) {
    throw std::invalid_argument("confidence must be in (0, 1)");
  }
  const int v = params.v > 0 ? params.v
                             : required_traps(params.theta, params.alpha);
  if (v < 1) throw std::invalid_argument("need at least one trap");
  if (params.target_shots < 1) {
    throw std::invalid_argument("need at least one target shot");
  }

  AccreditationReport report;
  report.theta = params.theta;
  report.alpha = params.alpha;
  report.v = v;

  // The target hides at a uniform position in the schedule. Every schedule
  // slot owns two decorrelated lanes, one for circuit generation and one for
  // execution, so results do not depend on evaluation order.
  Rng position_rng = Rng::substream(params.rng_seed, ~uint64_t{0});
  const int position =
      static_cast<int>(position_rng.uniform_int(static_cast<uint64_t>(v) + 1));
  report.target_position = position;

  for (int k = 0; k <= v; ++k) {
    Rng gen = Rng::substream(params.rng_seed, 2 * static_cast<uint64_t>(k));
    const uint64_t exec_seed =
        substream_seed(params.rng_seed, 2 * static_cast<uint64_t>(k) + 1);
    if (k == position) {
      const Circuit padded = apply_qotp(target, gen);
      ScheduledCircuit sc;
      sc.circuit = &padded;
      sc.pre_pad = &target;
      sc.trap = nullptr;
      sc.index = k;
      const std::vector<uint64_t> words =
          exec.run(sc, params.target_shots, exec_seed);
      for (uint64_t w : words) {
        report.target_samples[bitstring_to_string(w, target.n)] += 1;
      }
    } else {
      const TrapCircuit trap = generate_trap(target, gen);
      ScheduledCircuit sc;
      sc.circuit = &trap.circuit;
      sc.pre_pad = &trap.padless;
      sc.trap = &trap;
      sc.index = k;
      const std::vector<uint64_t> words = exec.run(sc, 1, exec_seed);
      const int incorrect = words.at(0) != 0 ? 1 : 0;
      report.trap_outcomes.push_back(incorrect);
      report.n_inc += incorrect;
    }
  }

  report.bound_raw =
      2.0 * static_cast<double>(report.n_inc) / v + params.theta;
  report.nontrivial = report.bound_raw < 1.0;
  return report;
}

}  // namespace accred
