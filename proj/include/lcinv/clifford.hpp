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

#ifndef LCINV_CLIFFORD_HPP
#define LCINV_CLIFFORD_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "lcinv/pauli.hpp"

namespace lcinv {

// An invertible 2x2 matrix over GF(2), acting on pair codes (u<<1|v).
struct Gl2 {
  // row-major bits [[a,b],[c,d]]: (u,v) -> (a u + b v, c u + d v)
  uint8_t a, b, c, d;
  int apply(int code) const {
    int u = (code >> 1) & 1, v = code & 1;
    return ((a * u ^ b * v) << 1) | (c * u ^ d * v);
  }
  bool operator==(const Gl2 &o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
};

// The six invertible 2x2 GF(2) matrices in a fixed order:
// index 0 identity, 1..3 the order-two elements (transpositions of the
// nonzero labels: 1 swaps X,Z; 2 swaps X,Y; 3 swaps Y,Z), 4..5 the
// order-three elements (4: X->Y->Z->X, 5: X->Z->Y->X).
const std::array<Gl2, 6> &gl2_elements();

// Sign of the permutation the element induces on the three nonzero labels:
// +1 for indices 0, 4, 5 and -1 for the transpositions 1..3.
int gl2_perm_sign(int q_index);

// Index of q2*q1 (apply q1 first) in gl2_elements().
int gl2_compose(int q2_index, int q1_index);

// One conjugation-distinct single-qubit Clifford element: the GF(2) matrix
// Q together with the signs of the images of X and Z,
//   U sigma_ab U^dag = alpha_ab sigma_{Q(a,b)}.
// The sign of the Y image is determined by unitarity:
//   alpha11 = alpha01 * alpha10 * sign(pi_Q),
// where pi_Q is the permutation Q induces on {X,Y,Z}. (The naive product
// rule alpha11 = alpha01*alpha10 holds only for even pi_Q; for odd pi_Q it
// would describe a Bloch-sphere reflection, which no unitary realizes.)
struct SingleClifford {
  int q = 0;           // index into gl2_elements()
  int alpha01 = +1;    // sign of the X image
  int alpha10 = +1;    // sign of the Z image

  int alpha11() const { return alpha01 * alpha10 * gl2_perm_sign(q); }
  // Sign of the image of pair code p (X=1, Z=2, Y=3); +1 for the identity label.
  int alpha(int code) const {
    switch (code) {
      case 1: return alpha01;
      case 2: return alpha10;
      case 3: return alpha11();
      default: return +1;
    }
  }
  bool operator==(const SingleClifford &o) const {
    return q == o.q && alpha01 == o.alpha01 && alpha10 == o.alpha10;
  }
};

struct ConjugatedPair {
  int sign;  // +1 or -1
  int code;  // image pair code
};

// U sigma_p U^dag = sign * sigma_{Q p}. Identity label maps to itself with +1.
ConjugatedPair conjugate_pauli(const SingleClifford &c, int pair_code);

// All 24 conjugation-distinct elements, ordered Q-major then
// (alpha01, alpha10) in (+,+), (+,-), (-,+), (-,-). Element 0 is the
// identity with all-plus signs.
const std::vector<SingleClifford> &enumerate_effective_C1();

// Composition c2 after c1 as conjugation actions; stays within the 24.
SingleClifford compose(const SingleClifford &c2, const SingleClifford &c1);

// A deterministic unitary representative from the closure of the two
// generators (the Hadamard and the phase gate) such that
// U sigma_ab U^dag = alpha_ab sigma_{Q(a,b)} for all nonzero (a,b).
// Representatives are found once by breadth-first closure with the global
// phase fixed (first nonzero entry positive real) and cached. Throws
// std::logic_error if no representative exists (cannot happen).
const Eigen::Matrix2cd &unitary_of(const SingleClifford &c);

// Number of elements in the dense closure of the two generators modulo
// global phase (expected: 24).
int dense_closure_size();

struct LocalClifford {
  std::vector<SingleClifford> factors;
  int n() const { return int(factors.size()); }
};

struct ConjugatedPauli {
  int sign;
  PauliIndex label;
};

// Per-qubit conjugation; the sign is the product of per-qubit signs.
// Throws std::invalid_argument on dimension mismatch.
ConjugatedPauli local_conjugate(const LocalClifford &L, const PauliIndex &w);

// Dense tensor-product unitary of a local element (qubit 1 leftmost).
Eigen::MatrixXcd dense_unitary(const LocalClifford &L);

// Uniform independent factors; deterministic given the generator state.
LocalClifford random_local_clifford(int n, std::mt19937_64 &rng);
inline LocalClifford random_local_clifford(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_local_clifford(n, rng);
}

}  // namespace lcinv

#endif  // LCINV_CLIFFORD_HPP
