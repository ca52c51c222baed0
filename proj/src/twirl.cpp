// SPDX-License-Identifier: MIT
#include "accred/twirl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "accred/gate.hpp"

namespace accred {

namespace {

const cplx kI{0.0, 1.0};

Eigen::Matrix2cd single_pauli(int code) {
  Eigen::Matrix2cd m;
  switch (code) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -kI, kI, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

void check_width(int k) {
  if (k < 1 || k > kTwirlCap) {
    throw std::invalid_argument("channel width out of range");
  }
}

}  // namespace

void validate_cptp(const KrausOps& kraus, int k, double tol) {
  check_width(k);
  const Eigen::Index dim = Eigen::Index{1} << k;
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& op : kraus) {
    if (op.rows() != dim || op.cols() != dim) {
      throw std::invalid_argument("kraus operator size mismatch");
    }
    sum += op.adjoint() * op;
  }
  const double err =
      (sum - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (err > tol) throw std::invalid_argument("kraus operators not complete");
}

Eigen::MatrixXcd apply_kraus_ops(const KrausOps& kraus,
                                 const Eigen::MatrixXcd& rho) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
  for (const auto& op : kraus) out += op * rho * op.adjoint();
  return out;
}

Eigen::MatrixXcd pauli_matrix_dense(int k, int idx) {
  check_width(k);
  Eigen::MatrixXcd out = single_pauli(idx & 3);
  idx >>= 2;
  for (int q = 1; q < k; ++q, idx >>= 2) {
    const Eigen::Matrix2cd next = single_pauli(idx & 3);
    // Kronecker with the new qubit as the more significant index bit.
    Eigen::MatrixXcd grown(out.rows() * 2, out.cols() * 2);
    grown.topLeftCorner(out.rows(), out.cols()) = next(0, 0) * out;
    grown.topRightCorner(out.rows(), out.cols()) = next(0, 1) * out;
    grown.bottomLeftCorner(out.rows(), out.cols()) = next(1, 0) * out;
    grown.bottomRightCorner(out.rows(), out.cols()) = next(1, 1) * out;
    out = grown;
  }
  return out;
}

int pauli_anticommute(int k, int a, int b) {
  int parity = 0;
  for (int q = 0; q < k; ++q, a >>= 2, b >>= 2) {
    const int ca = a & 3;
    const int cb = b & 3;
    if (ca != 0 && cb != 0 && ca != cb) parity ^= 1;
  }
  return parity;
}

Eigen::MatrixXd pauli_transfer_matrix(const KrausOps& kraus, int k) {
  check_width(k);
  const int count = 1 << (2 * k);
  const double norm = 1.0 / static_cast<double>(Eigen::Index{1} << k);
  Eigen::MatrixXd r(count, count);
  for (int b = 0; b < count; ++b) {
    const Eigen::MatrixXcd image =
        apply_kraus_ops(kraus, pauli_matrix_dense(k, b));
    for (int a = 0; a < count; ++a) {
      r(a, b) = ((pauli_matrix_dense(k, a) * image).trace() * norm).real();
    }
  }
  return r;
}

TwirlCheck twirl_check(const KrausOps& kraus, int k) {
  validate_cptp(kraus, k);
  const int count = 1 << (2 * k);
  TwirlCheck result;
  result.ptm = pauli_transfer_matrix(kraus, k);

  // Explicit frame average: conjugate the whole channel by each Pauli and
  // average the resulting Kraus families' transfer matrices.
  result.twirled_ptm = Eigen::MatrixXd::Zero(count, count);
  for (int f = 0; f < count; ++f) {
    const Eigen::MatrixXcd frame = pauli_matrix_dense(k, f);
    KrausOps conjugated;
    conjugated.reserve(kraus.size());
    for (const auto& op : kraus) conjugated.push_back(frame * op * frame);
    result.twirled_ptm += pauli_transfer_matrix(conjugated, k);
  }
  result.twirled_ptm /= static_cast<double>(count);

  // The diagonal of the input transfer matrix determines the Pauli error
  // rates through the anticommutation character sum.
  result.q.assign(static_cast<size_t>(count), 0.0);
  result.sum_q = 0.0;
  result.min_q = 1.0;
  for (int a = 0; a < count; ++a) {
    double acc = 0.0;
    for (int b = 0; b < count; ++b) {
      const double sign = pauli_anticommute(k, a, b) ? -1.0 : 1.0;
      acc += sign * result.ptm(b, b);
    }
    acc /= static_cast<double>(count);
    result.q[static_cast<size_t>(a)] = acc;
    result.sum_q += acc;
    if (acc < result.min_q) result.min_q = acc;
  }

  result.max_offdiag = 0.0;
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      if (a == b) continue;
      result.max_offdiag =
          std::max(result.max_offdiag, std::fabs(result.twirled_ptm(a, b)));
    }
  }
  return result;
}

KrausOps pauli_channel_kraus(int k, const std::vector<double>& q) {
  check_width(k);
  const int count = 1 << (2 * k);
  if (static_cast<int>(q.size()) != count) {
    throw std::invalid_argument("rate vector size mismatch");
  }
  KrausOps ops;
  ops.reserve(q.size());
  for (int a = 0; a < count; ++a) {
    const double rate = q[static_cast<size_t>(a)];
    if (rate < 0.0) throw std::invalid_argument("negative channel rate");
    if (rate == 0.0) continue;
    ops.push_back(std::sqrt(rate) * pauli_matrix_dense(k, a));
  }
  return ops;
}

KrausOps random_cptp(int k, int num_kraus, uint64_t seed) {
  check_width(k);
  if (num_kraus < 1) throw std::invalid_argument("need at least one operator");
  const Eigen::Index dim = Eigen::Index{1} << k;
  Rng rng(seed);
  KrausOps raw;
  raw.reserve(static_cast<size_t>(num_kraus));
  for (int i = 0; i < num_kraus; ++i) {
    Eigen::MatrixXcd g(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      for (Eigen::Index c = 0; c < dim; ++c) {
        g(r, c) = cplx{rng.gauss(), rng.gauss()} / std::sqrt(2.0);
      }
    }
    raw.push_back(g);
  }
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& g : raw) sum += g.adjoint() * g;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sum);
  const Eigen::MatrixXcd inv_sqrt =
      solver.eigenvectors() *
      solver.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
      solver.eigenvectors().adjoint();
  KrausOps ops;
  ops.reserve(raw.size());
  for (const auto& g : raw) ops.push_back(g * inv_sqrt);
  validate_cptp(ops, k);
  return ops;
}

}  // namespace accred
