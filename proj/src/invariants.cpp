// Copyright 2026 The lcinv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lcinv/invariants.hpp"

#include <bit>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace lcinv {

namespace {

// per-qubit entry of sigma at row bit a (column bit is a ^ v)
inline Complex pauli_entry(int u, int v, int a) {
  if (u == 0) return Complex(1, 0);                       // I or X
  if (v == 0) return a ? Complex(-1, 0) : Complex(1, 0);  // Z
  return a ? Complex(0, 1) : Complex(0, -1);              // Y
}

Complex sigma_row_value(const PauliIndex &w, uint64_t row) {
  Complex val(1, 0);
  for (int i = 1; i <= w.n; ++i) {
    int shift = w.n - i;
    val *= pauli_entry(int((w.u >> shift) & 1), int((w.v >> shift) & 1), int((row >> shift) & 1));
  }
  return val;
}

}  // namespace

Matrix sigma_dense(const PauliIndex &w) {
  const int64_t d = int64_t(1) << w.n;
  Matrix m = Matrix::Zero(d, d);
  for (int64_t a = 0; a < d; ++a) m(a, int64_t(uint64_t(a) ^ w.v)) = sigma_row_value(w, uint64_t(a));
  return m;
}

Matrix sigma_dense(const PairTuple &t) {
  PauliIndex w(t.r(), 0, 0);
  for (int j = 1; j <= t.r(); ++j) w.set_pair(j, t.pair[j - 1]);
  return sigma_dense(w);
}

int dense_dim_cap() {
  if (const char *s = std::getenv("LCINV_MAX_DENSE")) return std::atoi(s);
  return 1 << 12;
}

XTable x_transform(const Matrix &rho, int n) {
  const int64_t d = int64_t(1) << n;
  if (rho.rows() != d || rho.cols() != d)
    throw std::invalid_argument("x_transform: matrix dimension is not 2^n");
  XTable xt;
  xt.n = n;
  xt.x.resize(size_t(1) << (2 * n));
  for (uint64_t f = 0; f < xt.x.size(); ++f) {
    PauliIndex w = PauliIndex::from_flat(n, f);
    // Tr(rho sigma_w) = sum_b rho(b, b^v) sigma(b^v, b)
    Complex tr(0, 0);
    for (int64_t b = 0; b < d; ++b) {
      uint64_t c = uint64_t(b) ^ w.v;
      tr += rho(b, int64_t(c)) * sigma_row_value(w, c);
    }
    xt.x[f] = tr;
  }
  return xt;
}

Matrix rho_from_x(const XTable &xt) {
  const int64_t d = int64_t(1) << xt.n;
  Matrix rho = Matrix::Zero(d, d);
  const double scale = 1.0 / double(d);
  for (uint64_t f = 0; f < xt.x.size(); ++f) {
    PauliIndex w = PauliIndex::from_flat(xt.n, f);
    for (int64_t a = 0; a < d; ++a)
      rho(a, int64_t(uint64_t(a) ^ w.v)) += scale * xt.x[f] * sigma_row_value(w, uint64_t(a));
  }
  return rho;
}

namespace {

struct GammaMembers {
  int n = 0, r = 0;
  // members[i][k] = per-position pair codes of member k of row i's orbit
  std::vector<std::vector<PairTuple>> members;
};

GammaMembers members_of(const GammaTuple &g) {
  GammaMembers gm;
  gm.n = int(g.size());
  gm.r = g.empty() ? 0 : g[0].r;
  for (const auto &d : g) {
    if (d.r != gm.r) throw std::invalid_argument("gamma tuple: mixed lengths");
    gm.members.push_back(orbit_members(d));
  }
  return gm;
}

}  // namespace

Complex eval_gamma(const XTable &xt, const GammaTuple &g) {
  GammaMembers gm = members_of(g);
  if (xt.n != gm.n) throw std::invalid_argument("eval_gamma: qubit counts differ");
  const int n = gm.n, r = gm.r;
  // odometer over the Cartesian product, canonical member order
  std::vector<size_t> pick(size_t(n), 0);
  std::vector<uint64_t> windex(size_t(r));
  Complex total(0, 0);
  while (true) {
    for (int j = 0; j < r; ++j) windex[size_t(j)] = 0;
    for (int i = 0; i < n; ++i) {
      const PairTuple &t = gm.members[size_t(i)][pick[size_t(i)]];
      for (int j = 0; j < r; ++j) {
        int code = t.pair[size_t(j)];
        int shift = n - 1 - i;
        windex[size_t(j)] |= (uint64_t((code >> 1) & 1) << (n + shift)) |
                             (uint64_t(code & 1) << shift);
      }
    }
    Complex term(1, 0);
    for (int j = 0; j < r; ++j) term *= xt.x[windex[size_t(j)]];
    total += term;
    int i = n - 1;
    while (i >= 0 && ++pick[size_t(i)] == gm.members[size_t(i)].size()) pick[size_t(i--)] = 0;
    if (i < 0) break;
  }
  return total;
}

Complex eval_gamma(const XTable &xt, const OrbitMatrix &m) {
  return eval_gamma(xt, gamma_from_matrix(m));
}

Matrix build_A_orbit(const OrbitDescriptor &d) {
  const int64_t dim = int64_t(1) << d.r;
  Matrix a = Matrix::Zero(dim, dim);
  for (const auto &t : orbit_members(d)) a += sigma_dense(t);
  return a;
}

namespace {

void check_dense_cap(int n, int r) {
  if (n * r >= 31 || (int64_t(1) << (n * r)) > dense_dim_cap())
    throw std::length_error("dense path: 2^(n*r) exceeds the cap (" +
                            std::to_string(dense_dim_cap()) + ")");
}

// copy-major index of a qubit-major index: qubit-major has qubit i's r
// copy-bits contiguous (qubit 1 highest); copy-major has copy j's n
// qubit-bits contiguous (copy 1 highest)
int64_t copy_major_of(int64_t qm, int n, int r) {
  int64_t out = 0;
  const int total = n * r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r; ++j) {
      int64_t bit = (qm >> (total - 1 - (i * r + j))) & 1;
      out |= bit << (total - 1 - (j * n + i));
    }
  return out;
}

}  // namespace

Matrix build_A_gamma(const GammaTuple &g) {
  const int n = int(g.size());
  const int r = g.empty() ? 0 : g[0].r;
  check_dense_cap(n, r);
  Matrix acc = Matrix::Identity(1, 1);
  for (const auto &d : g) {
    Matrix ai = build_A_orbit(d);
    Matrix next(acc.rows() * ai.rows(), acc.cols() * ai.cols());
    for (Eigen::Index a = 0; a < acc.rows(); ++a)
      for (Eigen::Index b = 0; b < acc.cols(); ++b)
        next.block(a * ai.rows(), b * ai.cols(), ai.rows(), ai.cols()) = acc(a, b) * ai;
    acc = std::move(next);
  }
  const int64_t dim = int64_t(1) << (n * r);
  Matrix out = Matrix::Zero(dim, dim);
  std::vector<int64_t> cm(size_t(dim));
  for (int64_t q = 0; q < dim; ++q) cm[size_t(q)] = copy_major_of(q, n, r);
  for (int64_t a = 0; a < dim; ++a)
    for (int64_t b = 0; b < dim; ++b) out(cm[size_t(a)], cm[size_t(b)]) = acc(a, b);
  return out;
}

Matrix build_A_gamma_direct(const GammaTuple &g) {
  GammaMembers gm = members_of(g);
  const int n = gm.n, r = gm.r;
  check_dense_cap(n, r);
  const int64_t dim = int64_t(1) << (n * r);
  Matrix out = Matrix::Zero(dim, dim);
  std::vector<size_t> pick(size_t(n), 0);
  while (true) {
    // w^{(j)} for this member choice
    std::vector<PauliIndex> w(size_t(r), PauliIndex(n, 0, 0));
    for (int i = 0; i < n; ++i) {
      const PairTuple &t = gm.members[size_t(i)][pick[size_t(i)]];
      for (int j = 0; j < r; ++j) w[size_t(j)].set_pair(i + 1, t.pair[size_t(j)]);
    }
    Matrix term = Matrix::Identity(1, 1);
    for (int j = 0; j < r; ++j) {
      Matrix s = sigma_dense(w[size_t(j)]);
      Matrix next(term.rows() * s.rows(), term.cols() * s.cols());
      for (Eigen::Index a = 0; a < term.rows(); ++a)
        for (Eigen::Index b = 0; b < term.cols(); ++b)
          next.block(a * s.rows(), b * s.cols(), s.rows(), s.cols()) = term(a, b) * s;
      term = std::move(next);
    }
    out += term;
    int i = n - 1;
    while (i >= 0 && ++pick[size_t(i)] == gm.members[size_t(i)].size()) pick[size_t(i--)] = 0;
    if (i < 0) break;
  }
  return out;
}

Complex eval_via_matrix(const Matrix &rho, const GammaTuple &g) {
  const int n = int(g.size());
  const int r = g.empty() ? 0 : g[0].r;
  check_dense_cap(n, r);
  Matrix a = build_A_gamma(g);
  // rho^{tensor r}, copy 1 on the high bits
  Matrix rr = Matrix::Identity(1, 1);
  for (int j = 0; j < r; ++j) {
    Matrix next(rr.rows() * rho.rows(), rr.cols() * rho.cols());
    for (Eigen::Index p = 0; p < rr.rows(); ++p)
      for (Eigen::Index q = 0; q < rr.cols(); ++q)
        next.block(p * rho.rows(), q * rho.cols(), rho.rows(), rho.cols()) = rr(p, q) * rho;
    rr = std::move(next);
  }
  return (a * rr).trace();
}

Matrix averaging_operator(int r, const Matrix &A) {
  if (r < 1 || r > 4) throw std::length_error("averaging_operator: r must be in 1..4");
  const int64_t d = int64_t(1) << r;
  if (A.rows() != d || A.cols() != d)
    throw std::invalid_argument("averaging_operator: matrix dimension is not 2^r");
  Matrix acc = Matrix::Zero(d, d);
  for (const auto &c : enumerate_effective_C1()) {
    LocalClifford L;
    L.factors.assign(size_t(r), c);
    Matrix ur = dense_unitary(L);
    acc += ur * A * ur.adjoint();
  }
  return acc / 24.0;
}

bool LambdaTuple::valid() const {
  if (l0 < 0 || l1 < 0 || l2 < 0 || l3 < 0) return false;
  if (!(l1 >= l2 && l2 >= l3)) return false;
  return ((l1 ^ l2) & 1) == 0 && ((l2 ^ l3) & 1) == 0;
}

namespace {

Complex ipow(Complex z, int e) {
  Complex out(1, 0);
  for (int i = 0; i < e; ++i) out *= z;
  return out;
}

}  // namespace

Complex p_lambda(const XTable &xt, const LambdaTuple &lam) {
  if (xt.n != 1) throw std::invalid_argument("p_lambda: defined for one qubit");
  if (!lam.valid()) throw std::invalid_argument("p_lambda: invalid 4-tuple");
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const Complex x00 = xt.x[0b00], x01 = xt.x[0b01], x10 = xt.x[0b10], x11 = xt.x[0b11];
  const int l[3] = {lam.l1, lam.l2, lam.l3};
  Complex sum(0, 0);
  for (const auto &p : perms)
    sum += ipow(x01, l[p[0]]) * ipow(x10, l[p[1]]) * ipow(x11, l[p[2]]);
  return ipow(x00, lam.l0) * sum;
}

std::vector<LambdaTuple> enumerate_lambda(int r) {
  std::vector<LambdaTuple> out;
  for (int l0 = r; l0 >= 0; --l0)
    for (int l1 = r - l0; l1 >= 0; --l1)
      for (int l2 = std::min(l1, r - l0 - l1); l2 >= 0; --l2) {
        LambdaTuple lam{l0, l1, l2, r - l0 - l1 - l2};
        if (lam.l3 <= lam.l2 && lam.l3 >= 0 && lam.valid()) out.push_back(lam);
      }
  return out;
}

namespace {

uint64_t support_mask(const PauliIndex &w) {
  uint64_t m = 0;
  for (int i = 1; i <= w.n; ++i)
    if (w.pair(i) != 0) m |= uint64_t(1) << (w.n - i);
  return m;
}

}  // namespace

Complex degree2_p(const XTable &xt, uint64_t omega_mask) {
  Complex sum(0, 0);
  for (uint64_t f = 0; f < xt.x.size(); ++f)
    if (support_mask(PauliIndex::from_flat(xt.n, f)) == omega_mask) sum += xt.x[f] * xt.x[f];
  return sum;
}

Complex degree2_q(const XTable &xt, uint64_t omega_mask) {
  Complex sum(0, 0);
  for (uint64_t f = 0; f < xt.x.size(); ++f) {
    uint64_t s = support_mask(PauliIndex::from_flat(xt.n, f));
    if ((s & ~omega_mask) == 0) sum += xt.x[f] * xt.x[f];
  }
  return sum;
}

Matrix partial_trace(const Matrix &rho, int n, uint64_t keep_mask) {
  const int64_t d = int64_t(1) << n;
  if (rho.rows() != d || rho.cols() != d)
    throw std::invalid_argument("partial_trace: matrix dimension is not 2^n");
  std::vector<int> kept;  // qubit indices, 1-based, original order
  for (int i = 1; i <= n; ++i)
    if ((keep_mask >> (n - i)) & 1) kept.push_back(i);
  const int k = int(kept.size());
  Matrix out = Matrix::Zero(int64_t(1) << k, int64_t(1) << k);
  for (int64_t a = 0; a < d; ++a)
    for (int64_t b = 0; b < d; ++b) {
      if (((uint64_t(a) ^ uint64_t(b)) & ~keep_mask) != 0) continue;
      int64_t ai = 0, bi = 0;
      for (int t = 0; t < k; ++t) {
        int shift = n - kept[size_t(t)];
        ai |= ((a >> shift) & 1) << (k - 1 - t);
        bi |= ((b >> shift) & 1) << (k - 1 - t);
      }
      out(ai, bi) += rho(a, b);
    }
  return out;
}

namespace {

// pad a matrix on the kept qubits back to n qubits with I/2 on the rest
Matrix embed_mixed(const Matrix &red, int n, uint64_t keep_mask) {
  const int64_t d = int64_t(1) << n;
  std::vector<int> kept;
  for (int i = 1; i <= n; ++i)
    if ((keep_mask >> (n - i)) & 1) kept.push_back(i);
  const int k = int(kept.size());
  const double w = 1.0 / double(int64_t(1) << (n - k));
  Matrix out = Matrix::Zero(d, d);
  for (int64_t a = 0; a < d; ++a)
    for (int64_t b = 0; b < d; ++b) {
      if (((uint64_t(a) ^ uint64_t(b)) & ~keep_mask) != 0) continue;
      int64_t ai = 0, bi = 0;
      for (int t = 0; t < k; ++t) {
        int shift = n - kept[size_t(t)];
        ai |= ((a >> shift) & 1) << (k - 1 - t);
        bi |= ((b >> shift) & 1) << (k - 1 - t);
      }
      out(a, b) = red(ai, bi) * w;
    }
  return out;
}

void foreach_submask(uint64_t mask, const std::function<void(uint64_t)> &f) {
  uint64_t s = mask;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & mask;
  }
}

}  // namespace

Complex degree3_lu_form(const Matrix &rho, const GammaTuple &g) {
  const int n = int(g.size());
  if (g.empty() || g[0].r != 3) throw std::invalid_argument("degree3_lu_form: needs r = 3");
  // support masks of (w1, w2, w1+w2) from any one member tuple
  uint64_t om1 = 0, om2 = 0, om12 = 0;
  for (int i = 0; i < n; ++i) {
    const PairTuple t = orbit_members(g[size_t(i)]).front();
    uint64_t bit = uint64_t(1) << (n - 1 - i);
    if (t.pair[0] != 0) om1 |= bit;
    if (t.pair[1] != 0) om2 |= bit;
    if (t.pair[2] != 0) om12 |= bit;
  }
  Complex total(0, 0);
  foreach_submask(om1, [&](uint64_t a) {
    Matrix ga = embed_mixed(partial_trace(rho, n, a), n, a);
    foreach_submask(om2, [&](uint64_t b) {
      Matrix gb = embed_mixed(partial_trace(rho, n, b), n, b);
      foreach_submask(om12, [&](uint64_t c) {
        Matrix gc = embed_mixed(partial_trace(rho, n, c), n, c);
        int sgn = (std::popcount(a) + std::popcount(b) + std::popcount(c)) % 2 ? -1 : 1;
        total += double(sgn) * (ga * gb * gc).trace();
      });
    });
  });
  return total;
}

bool all_odd_orbit(const OrbitDescriptor &d) {
  return d.parity_valid() && (std::popcount(d.parts[0]) & 1);
}

std::vector<int> all_odd_rows(const OrbitMatrix &m) {
  std::vector<int> out;
  for (int i = 1; i <= m.n; ++i) {
    int c[4] = {0, 0, 0, 0};
    for (int j = 1; j <= m.r; ++j) c[m.at(i, j)]++;
    if ((c[1] & 1) && (c[2] & 1) && (c[3] & 1)) out.push_back(i);
  }
  return out;
}

}  // namespace lcinv
