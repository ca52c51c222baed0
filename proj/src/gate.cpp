// SPDX-License-Identifier: MIT
#include "accred/gate.hpp"

#include <cmath>
#include <stdexcept>

namespace accred {

Mat2 Mat2::mul(const Mat2& o) const {
  Mat2 r;
  r.a = a * o.a + b * o.c;
  r.b = a * o.b + b * o.d;
  r.c = c * o.a + d * o.c;
  r.d = c * o.b + d * o.d;
  return r;
}

Mat2 Mat2::dagger() const {
  Mat2 r;
  r.a = std::conj(a);
  r.b = std::conj(c);
  r.c = std::conj(b);
  r.d = std::conj(d);
  return r;
}

bool Mat2::is_unitary(double tol) const {
  Mat2 p = dagger().mul(*this);
  return std::abs(p.a - cplx{1.0}) <= tol && std::abs(p.b) <= tol &&
         std::abs(p.c) <= tol && std::abs(p.d - cplx{1.0}) <= tol;
}

double Mat2::dist(const Mat2& o) const {
  double m = std::abs(a - o.a);
  m = std::max(m, std::abs(b - o.b));
  m = std::max(m, std::abs(c - o.c));
  m = std::max(m, std::abs(d - o.d));
  return m;
}

namespace {

// Divides out the global phase so the first entry with significant magnitude
// becomes real and positive. Two unitaries equal up to phase canonicalize to
// the same matrix.
Mat2 canonical_phase(const Mat2& m) {
  const cplx* entries[4] = {&m.a, &m.b, &m.c, &m.d};
  cplx ref{1.0};
  for (const cplx* e : entries) {
    if (std::abs(*e) > 1e-6) {
      ref = *e / std::abs(*e);
      break;
    }
  }
  Mat2 r = m;
  r.a /= ref;
  r.b /= ref;
  r.c /= ref;
  r.d /= ref;
  return r;
}

Mat2 pauli_matrix(int p) {
  Mat2 m;
  switch (p) {
    case 0: return m;
    case 1: m = {cplx{0}, cplx{1}, cplx{1}, cplx{0}}; return m;
    case 2: m = {cplx{0}, cplx{0, -1}, cplx{0, 1}, cplx{0}}; return m;
    case 3: m = {cplx{1}, cplx{0}, cplx{0}, cplx{-1}}; return m;
  }
  throw std::logic_error("pauli_matrix: bad index");
}

}  // namespace

const CliffordTable& CliffordTable::instance() {
  static const CliffordTable t;
  return t;
}

CliffordTable::CliffordTable() {
  const double r = 1.0 / std::sqrt(2.0);
  Mat2 h{cplx{r}, cplx{r}, cplx{r}, cplx{-r}};
  Mat2 s{cplx{1}, cplx{0}, cplx{0}, cplx{0, 1}};

  std::vector<Mat2> elems;
  std::vector<std::string> words;
  elems.push_back(canonical_phase(Mat2::identity()));
  words.emplace_back("");

  auto find_in = [&](const Mat2& m) -> int {
    Mat2 c = canonical_phase(m);
    for (size_t i = 0; i < elems.size(); ++i) {
      if (elems[i].dist(c) <= 1e-9) return static_cast<int>(i);
    }
    return -1;
  };

  // Breadth-first closure under left-multiplication by H and S. The visit
  // order fixes the element indices.
  for (size_t head = 0; head < elems.size(); ++head) {
    Mat2 base = elems[head];
    std::string w = words[head];
    const Mat2* gens[2] = {&h, &s};
    const char gen_char[2] = {'h', 's'};
    for (int g = 0; g < 2; ++g) {
      Mat2 prod = gens[g]->mul(base);
      if (find_in(prod) < 0) {
        elems.push_back(canonical_phase(prod));
        words.push_back(w + gen_char[g]);
      }
    }
  }
  if (elems.size() != kSize) {
    throw std::logic_error("CliffordTable: group closure has wrong size");
  }
  for (int i = 0; i < kSize; ++i) {
    mat_[i] = elems[i];
    word_[i] = words[i];
  }

  for (int i = 0; i < kSize; ++i) {
    for (int j = 0; j < kSize; ++j) {
      int k = find_in(mat_[i].mul(mat_[j]));
      if (k < 0) throw std::logic_error("CliffordTable: not closed");
      mul_[i][j] = k;
    }
  }
  for (int i = 0; i < kSize; ++i) {
    inv_[i] = -1;
    for (int j = 0; j < kSize; ++j) {
      if (mul_[i][j] == 0) inv_[i] = j;
    }
    if (inv_[i] < 0) throw std::logic_error("CliffordTable: missing inverse");
  }

  for (int i = 0; i < kSize; ++i) {
    act_[i][0] = 0;
    sgn_[i][0] = 1;
    for (int p = 1; p <= 3; ++p) {
      Mat2 conj = mat_[i].mul(pauli_matrix(p)).mul(mat_[i].dagger());
      int found = 0;
      for (int q = 1; q <= 3 && !found; ++q) {
        for (int sg = 1; sg >= -1 && !found; sg -= 2) {
          Mat2 cand = pauli_matrix(q);
          cand.a *= static_cast<double>(sg);
          cand.b *= static_cast<double>(sg);
          cand.c *= static_cast<double>(sg);
          cand.d *= static_cast<double>(sg);
          if (conj.dist(cand) <= 1e-9) {
            act_[i][p] = q;
            sgn_[i][p] = sg;
            found = 1;
          }
        }
      }
      if (!found) throw std::logic_error("CliffordTable: bad Pauli action");
    }
  }

  Mat2 named_mats[7] = {
      Mat2::identity(),
      pauli_matrix(1),
      pauli_matrix(2),
      pauli_matrix(3),
      h,
      s,
      s.dagger(),
  };
  for (int i = 0; i < 7; ++i) {
    int idx = find_in(named_mats[i]);
    if (idx < 0) throw std::logic_error("CliffordTable: named gate missing");
    named_[i] = idx;
  }
}

std::optional<int> CliffordTable::find(const Mat2& u, double tol) const {
  Mat2 c = canonical_phase(u);
  for (int i = 0; i < kSize; ++i) {
    if (mat_[i].dist(c) <= tol) return i;
  }
  return std::nullopt;
}

Gate1Q Gate1Q::clifford(int index) {
  if (index < 0 || index >= CliffordTable::kSize) {
    throw std::invalid_argument("Gate1Q: Clifford index out of range");
  }
  Gate1Q g;
  g.cl = index;
  g.u = CliffordTable::instance().matrix(index);
  return g;
}

Gate1Q Gate1Q::id() { return clifford(CliffordTable::instance().id_i()); }
Gate1Q Gate1Q::x() { return clifford(CliffordTable::instance().id_x()); }
Gate1Q Gate1Q::y() { return clifford(CliffordTable::instance().id_y()); }
Gate1Q Gate1Q::z() { return clifford(CliffordTable::instance().id_z()); }
Gate1Q Gate1Q::h() { return clifford(CliffordTable::instance().id_h()); }
Gate1Q Gate1Q::s() { return clifford(CliffordTable::instance().id_s()); }
Gate1Q Gate1Q::sdg() { return clifford(CliffordTable::instance().id_sdg()); }

Gate1Q Gate1Q::generic(const Mat2& u) {
  if (!u.is_unitary(1e-12)) {
    throw std::invalid_argument("Gate1Q: matrix is not unitary within 1e-12");
  }
  Gate1Q g;
  g.cl = -1;
  g.u = u;
  return g;
}

Gate1Q Gate1Q::from_matrix(const Mat2& u) {
  if (!u.is_unitary(1e-12)) {
    throw std::invalid_argument("Gate1Q: matrix is not unitary within 1e-12");
  }
  if (auto idx = CliffordTable::instance().find(u)) {
    return clifford(*idx);
  }
  Gate1Q g;
  g.cl = -1;
  g.u = u;
  return g;
}

const char* Gate1Q::name() const {
  if (cl < 0) return nullptr;
  const auto& t = CliffordTable::instance();
  if (cl == t.id_i()) return "I";
  if (cl == t.id_x()) return "X";
  if (cl == t.id_y()) return "Y";
  if (cl == t.id_z()) return "Z";
  if (cl == t.id_h()) return "H";
  if (cl == t.id_s()) return "S";
  if (cl == t.id_sdg()) return "Sdg";
  return nullptr;
}

Gate1Q Gate1Q::compose_after(const Gate1Q& o) const {
  if (is_clifford() && o.is_clifford()) {
    return clifford(CliffordTable::instance().compose(cl, o.cl));
  }
  Gate1Q g;
  g.cl = -1;
  g.u = u.mul(o.u);
  return g;
}

bool Gate1Q::is_identity() const {
  return cl == CliffordTable::instance().id_i();
}

}  // namespace accred
