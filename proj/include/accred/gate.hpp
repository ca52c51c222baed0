// SPDX-License-Identifier: MIT
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace accred {

using cplx = std::complex<double>;

// Dense 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  cplx a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static Mat2 identity() { return {}; }
  Mat2 mul(const Mat2& o) const;  // this * o (o acts first in time)
  Mat2 dagger() const;
  bool is_unitary(double tol) const;
  double dist(const Mat2& o) const;  // max entrywise abs difference
};

// The 24 single-qubit Clifford unitaries modulo global phase, generated from
// H and S. Element 0 is the identity; indices are fixed by a deterministic
// breadth-first enumeration so they are stable across runs and platforms.
class CliffordTable {
 public:
  static const CliffordTable& instance();

  static constexpr int kSize = 24;

  // Index of (second * first), i.e. `first` is applied earlier in time.
  int compose(int second, int first) const { return mul_[second][first]; }
  int inverse(int g) const { return inv_[g]; }

  // Conjugation action on Paulis, U P U^dagger. `p` and the return value use
  // 1 = X, 2 = Y, 3 = Z. The accompanying sign is +1 or -1.
  int conj_pauli(int g, int p) const { return act_[g][p]; }
  int conj_sign(int g, int p) const { return sgn_[g][p]; }

  // Phase-canonical matrix of the element.
  const Mat2& matrix(int g) const { return mat_[g]; }

  // Generator word in time order; each char is 'h' or 's'. Empty for identity.
  const std::string& word(int g) const { return word_[g]; }

  // Matches an arbitrary unitary against the group up to global phase.
  std::optional<int> find(const Mat2& u, double tol = 1e-9) const;

  // Indices of the named gates.
  int id_i() const { return named_[0]; }
  int id_x() const { return named_[1]; }
  int id_y() const { return named_[2]; }
  int id_z() const { return named_[3]; }
  int id_h() const { return named_[4]; }
  int id_s() const { return named_[5]; }
  int id_sdg() const { return named_[6]; }

 private:
  CliffordTable();
  Mat2 mat_[kSize];
  std::string word_[kSize];
  int mul_[kSize][kSize];
  int inv_[kSize];
  int act_[kSize][4];
  int sgn_[kSize][4];
  int named_[7];
};

// A single-qubit gate. Clifford gates are symbolic (an index into
// CliffordTable) so they survive composition without numerical drift;
// anything else carries its unitary matrix.
struct Gate1Q {
  int cl = 0;  // CliffordTable index, or -1 for a generic unitary
  Mat2 u;      // always the gate's matrix (canonical phase when symbolic)

  static Gate1Q id();
  static Gate1Q x();
  static Gate1Q y();
  static Gate1Q z();
  static Gate1Q h();
  static Gate1Q s();
  static Gate1Q sdg();
  static Gate1Q clifford(int index);
  // Requires unitarity within 1e-12. The gate stays generic even when the
  // matrix happens to be Clifford; use from_matrix for recognition.
  static Gate1Q generic(const Mat2& u);
  // Recognizes Clifford matrices (up to global phase) and stores them
  // symbolically; falls back to a generic gate.
  static Gate1Q from_matrix(const Mat2& u);

  bool is_clifford() const { return cl >= 0; }
  // One of "I","X","Y","Z","H","S","Sdg" for the named gates, else nullptr.
  const char* name() const;

  // this * o with `o` acting first; symbolic when both sides are Clifford.
  Gate1Q compose_after(const Gate1Q& o) const;

  bool is_identity() const;
};

}  // namespace accred
