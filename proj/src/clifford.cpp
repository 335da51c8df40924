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

#include "lcinv/clifford.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace lcinv {

const std::array<Gl2, 6> &gl2_elements() {
  // 0: identity; 1: swap X<->Z; 2: swap X<->Y; 3: swap Y<->Z;
  // 4: X->Y->Z->X; 5: X->Z->Y->X.
  static const std::array<Gl2, 6> table = {{
      {1, 0, 0, 1},
      {0, 1, 1, 0},
      {1, 1, 0, 1},
      {1, 0, 1, 1},
      {0, 1, 1, 1},
      {1, 1, 1, 0},
  }};
  return table;
}

int gl2_perm_sign(int q_index) { return (q_index >= 1 && q_index <= 3) ? -1 : +1; }

int gl2_compose(int q2_index, int q1_index) {
  const auto &g = gl2_elements();
  // compare action on X and Z (they determine the matrix)
  int x = g[q2_index].apply(g[q1_index].apply(1));
  int z = g[q2_index].apply(g[q1_index].apply(2));
  for (int k = 0; k < 6; ++k)
    if (g[k].apply(1) == x && g[k].apply(2) == z) return k;
  throw std::logic_error("gl2_compose: composition left GL(2,F2)");
}

ConjugatedPair conjugate_pauli(const SingleClifford &c, int pair_code) {
  if (pair_code == 0) return {+1, 0};
  return {c.alpha(pair_code), gl2_elements()[c.q].apply(pair_code)};
}

const std::vector<SingleClifford> &enumerate_effective_C1() {
  static const std::vector<SingleClifford> table = [] {
    std::vector<SingleClifford> out;
    out.reserve(24);
    const int signs[4][2] = {{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}};
    for (int q = 0; q < 6; ++q)
      for (const auto &s : signs) out.push_back(SingleClifford{q, s[0], s[1]});
    return out;
  }();
  return table;
}

SingleClifford compose(const SingleClifford &c2, const SingleClifford &c1) {
  SingleClifford out;
  out.q = gl2_compose(c2.q, c1.q);
  // signs propagate through the conjugation of the basis labels
  auto sx = conjugate_pauli(c2, conjugate_pauli(c1, 1).code);
  auto sz = conjugate_pauli(c2, conjugate_pauli(c1, 2).code);
  out.alpha01 = conjugate_pauli(c1, 1).sign * sx.sign;
  out.alpha10 = conjugate_pauli(c1, 2).sign * sz.sign;
  return out;
}

namespace {

Eigen::Matrix2cd pauli_2x2(int code) {
  Eigen::Matrix2cd m;
  const Complex i(0, 1);
  switch (code) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 1, 0, 0, -1; break;
    default: m << 0, -i, i, 0; break;
  }
  return m;
}

Eigen::Matrix2cd fix_phase(const Eigen::Matrix2cd &u) {
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      Complex z = u(a, b);
      if (std::abs(z) > 1e-9) return u * (std::abs(z) / z);
    }
  return u;
}

struct UnitaryKey {
  std::array<int64_t, 8> q;
  bool operator<(const UnitaryKey &o) const { return q < o.q; }
};

UnitaryKey key_of(const Eigen::Matrix2cd &u) {
  UnitaryKey k{};
  int idx = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      k.q[idx++] = int64_t(std::llround(u(a, b).real() * 1e8));
      k.q[idx++] = int64_t(std::llround(u(a, b).imag() * 1e8));
    }
  return k;
}

// (Q index, alpha01, alpha10) of a dense unitary's conjugation action.
SingleClifford action_of(const Eigen::Matrix2cd &u) {
  SingleClifford c;
  int img[4] = {0, 0, 0, 0};
  int sgn[4] = {1, 1, 1, 1};
  for (int p = 1; p < 4; ++p) {
    Eigen::Matrix2cd m = u * pauli_2x2(p) * u.adjoint();
    bool found = false;
    for (int t = 1; t < 4 && !found; ++t) {
      Complex c2 = (m * pauli_2x2(t)).trace() / 2.0;
      if (std::abs(c2) > 0.5) {
        if (std::abs(c2.imag()) > 1e-9 || std::abs(std::abs(c2.real()) - 1.0) > 1e-9)
          throw std::logic_error("closure: non-Pauli conjugation image");
        img[p] = t;
        sgn[p] = c2.real() > 0 ? +1 : -1;
        found = true;
      }
    }
    if (!found) throw std::logic_error("closure: conjugation image not found");
  }
  const auto &g = gl2_elements();
  c.q = -1;
  for (int k = 0; k < 6; ++k)
    if (g[k].apply(1) == img[1] && g[k].apply(2) == img[2]) c.q = k;
  if (c.q < 0) throw std::logic_error("closure: action is not GF(2)-linear");
  c.alpha01 = sgn[1];
  c.alpha10 = sgn[2];
  // Unitarity ties the Y sign to the permutation parity; anything else
  // would be a Bloch reflection.
  if (sgn[3] != c.alpha01 * c.alpha10 * gl2_perm_sign(c.q))
    throw std::logic_error("closure: Y sign inconsistent with permutation parity");
  return c;
}

struct UnitaryTable {
  std::vector<Eigen::Matrix2cd> rep;  // indexed like enumerate_effective_C1
  int closure_size = 0;
};

const UnitaryTable &unitary_table() {
  static const UnitaryTable table = [] {
    UnitaryTable t;
    Eigen::Matrix2cd h, s;
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    s << 1, 0, 0, Complex(0, 1);

    std::map<UnitaryKey, Eigen::Matrix2cd> seen;
    std::vector<Eigen::Matrix2cd> frontier;
    Eigen::Matrix2cd id = fix_phase(Eigen::Matrix2cd::Identity());
    seen[key_of(id)] = id;
    frontier.push_back(id);
    while (!frontier.empty()) {
      std::vector<Eigen::Matrix2cd> next;
      for (const auto &u : frontier)
        for (const auto &g : {h, s}) {
          Eigen::Matrix2cd w = fix_phase(g * u);
          auto k = key_of(w);
          if (!seen.count(k)) {
            seen[k] = w;
            next.push_back(w);
          }
        }
      frontier = std::move(next);
    }
    t.closure_size = int(seen.size());

    const auto &elems = enumerate_effective_C1();
    t.rep.resize(elems.size());
    std::vector<bool> got(elems.size(), false);
    for (const auto &[k, u] : seen) {
      SingleClifford c = action_of(u);
      for (size_t i = 0; i < elems.size(); ++i)
        if (elems[i] == c && !got[i]) {
          t.rep[i] = u;
          got[i] = true;
        }
    }
    for (size_t i = 0; i < elems.size(); ++i)
      if (!got[i])
        throw std::logic_error("closure search found no unitary for element " + std::to_string(i));
    return t;
  }();
  return table;
}

}  // namespace

const Eigen::Matrix2cd &unitary_of(const SingleClifford &c) {
  const auto &elems = enumerate_effective_C1();
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == c) return unitary_table().rep[i];
  throw std::invalid_argument("unitary_of: not one of the 24 effective elements");
}

int dense_closure_size() { return unitary_table().closure_size; }

ConjugatedPauli local_conjugate(const LocalClifford &L, const PauliIndex &w) {
  if (L.n() != w.n) throw std::invalid_argument("local_conjugate: qubit counts differ");
  ConjugatedPauli out{+1, PauliIndex(w.n, 0, 0)};
  for (int i = 1; i <= w.n; ++i) {
    auto cp = conjugate_pauli(L.factors[i - 1], w.pair(i));
    out.sign *= cp.sign;
    out.label.set_pair(i, cp.code);
  }
  return out;
}

Eigen::MatrixXcd dense_unitary(const LocalClifford &L) {
  // qubit 1 leftmost: u stays on the high index bits as factors append
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(1, 1);
  for (const auto &f : L.factors) {
    const Eigen::Matrix2cd &g = unitary_of(f);
    Eigen::MatrixXcd next(u.rows() * 2, u.cols() * 2);
    for (Eigen::Index a = 0; a < u.rows(); ++a)
      for (Eigen::Index b = 0; b < u.cols(); ++b)
        next.block(a * 2, b * 2, 2, 2) = u(a, b) * g;
    u = std::move(next);
  }
  return u;
}

LocalClifford random_local_clifford(int n, std::mt19937_64 &rng) {
  if (n < 1) throw std::invalid_argument("random_local_clifford: n must be >= 1");
  std::uniform_int_distribution<int> dist(0, 23);
  LocalClifford L;
  L.factors.reserve(n);
  for (int i = 0; i < n; ++i) L.factors.push_back(enumerate_effective_C1()[dist(rng)]);
  return L;
}

}  // namespace lcinv
