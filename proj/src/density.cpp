// SPDX-License-Identifier: MIT
#include "accred/density.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace accred {

namespace {

Eigen::MatrixXcd expand_1q(const Mat2& u, int q, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  const uint64_t bit = uint64_t{1} << q;
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
  const cplx entry[2][2] = {{u.a, u.b}, {u.c, u.d}};
  for (uint64_t col = 0; col < static_cast<uint64_t>(dim); ++col) {
    const int cb = (col & bit) ? 1 : 0;
    for (int rb = 0; rb < 2; ++rb) {
      const uint64_t row = (col & ~bit) | (rb ? bit : 0);
      full(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          entry[rb][cb];
    }
  }
  return full;
}

}  // namespace

DensityMatrix::DensityMatrix(int n) : n_(n) {
  if (n < 1 || n > kDensityCap) {
    throw std::invalid_argument("density width out of range");
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  rho_ = Eigen::MatrixXcd::Zero(dim, dim);
  rho_(0, 0) = cplx{1.0, 0.0};
}

DensityMatrix DensityMatrix::pure_zero(int n) { return DensityMatrix(n); }

void DensityMatrix::apply_unitary(const Eigen::MatrixXcd& u) {
  rho_ = u * rho_ * u.adjoint();
}

void DensityMatrix::apply_cycle(const Cycle& cy) {
  apply_unitary(cycle_unitary(cy, n_));
}

void DensityMatrix::apply_circuit(const Circuit& c) {
  if (c.n != n_) throw std::invalid_argument("circuit width mismatch");
  c.validate();
  for (const auto& cy : c.cycles) apply_cycle(cy);
}

void DensityMatrix::apply_pauli_channel(const CyclePauliNoise& noise) {
  noise.validate();
  Eigen::MatrixXcd out = (1.0 - noise.q_tot()) * rho_;
  for (const auto& [p, rate] : noise.entries) {
    if (p.n != n_) throw std::invalid_argument("channel width mismatch");
    const Eigen::MatrixXcd pm = pauli_unitary(p);
    out += rate * (pm * rho_ * pm.adjoint());
  }
  rho_ = out;
}

void DensityMatrix::apply_flip_channel(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("flip rate out of range");
  if (p == 0.0) return;
  for (int q = 0; q < n_; ++q) {
    const Eigen::MatrixXcd xq =
        pauli_unitary(PauliString(n_, uint64_t{1} << q, 0));
    rho_ = (1.0 - p) * rho_ + p * (xq * rho_ * xq.adjoint());
  }
}

void DensityMatrix::apply_kraus(const std::vector<Eigen::MatrixXcd>& kraus) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho_.rows(), rho_.cols());
  for (const auto& k : kraus) out += k * rho_ * k.adjoint();
  rho_ = out;
}

Distribution DensityMatrix::diagonal() const {
  Distribution d = Distribution::zeros(n_);
  for (Eigen::Index i = 0; i < rho_.rows(); ++i) {
    d.p[static_cast<uint64_t>(i)] = rho_(i, i).real();
  }
  return d;
}

double DensityMatrix::trace_real() const { return rho_.trace().real(); }

void DensityMatrix::check_invariants() const {
  const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-10) throw std::logic_error("density matrix not hermitian");
  if (std::fabs(trace_real() - 1.0) > 1e-10) {
    throw std::logic_error("density matrix trace drifted");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho_);
  if (solver.eigenvalues().minCoeff() < -1e-8) {
    throw std::logic_error("density matrix not positive semidefinite");
  }
}

Eigen::MatrixXcd cycle_unitary(const Cycle& cy, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(dim, dim);
  if (is_u1(cy)) {
    const auto& u1 = std::get<OneQubitCycle>(cy);
    if (static_cast<int>(u1.gates.size()) != n) {
      throw std::invalid_argument("cycle width mismatch");
    }
    for (int q = 0; q < n; ++q) {
      const Gate1Q& g = u1.gates[static_cast<size_t>(q)];
      if (!g.is_identity()) full = expand_1q(g.u, q, n) * full;
    }
    return full;
  }
  const auto& ent = std::get<EntanglingCycle>(cy);
  for (const auto& [a, b] : ent.pairs) {
    const uint64_t abit = uint64_t{1} << a;
    const uint64_t bbit = uint64_t{1} << b;
    Eigen::MatrixXcd layer = Eigen::MatrixXcd::Zero(dim, dim);
    for (uint64_t col = 0; col < static_cast<uint64_t>(dim); ++col) {
      if (ent.kind == EntanglerKind::CZ) {
        const double sign = ((col & abit) && (col & bbit)) ? -1.0 : 1.0;
        layer(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) =
            sign;
      } else {
        const uint64_t row = (col & abit) ? (col ^ bbit) : col;
        layer(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
            1.0;
      }
    }
    full = layer * full;
  }
  return full;
}

Eigen::MatrixXcd pauli_unitary(const PauliString& p) {
  const Eigen::Index dim = Eigen::Index{1} << p.n;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (uint64_t col = 0; col < static_cast<uint64_t>(dim); ++col) {
    const double sign = (std::popcount(col & p.z) & 1) != 0 ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(col ^ p.x), static_cast<Eigen::Index>(col)) =
        sign;
  }
  return out;
}

Distribution noisy_output_distribution(const Circuit& c,
                                       const NoiseModel& model) {
  c.require_canonical();
  const int n = c.n;
  const int m = c.num_u_cycles();
  model.validate(n, m);
  if (n > kDensityCap) {
    throw std::invalid_argument("circuit too wide for density evaluation");
  }

  DensityMatrix rho = DensityMatrix::pure_zero(n);
  rho.apply_flip_channel(model.prep_flip);
  rho.apply_pauli_channel(model.slots[0]);
  for (int j = 1; j <= m; ++j) {
    rho.apply_cycle(Cycle{c.u_cycle(j)});
    if (j < m) rho.apply_cycle(Cycle{c.e_cycle(j)});
    rho.apply_pauli_channel(model.slot_for_cycle(j, c.u_cycle(j)));
  }
  rho.apply_flip_channel(model.meas_flip);
  rho.check_invariants();
  Distribution d = rho.diagonal();
  d.validate();
  return d;
}

}  // namespace accred
