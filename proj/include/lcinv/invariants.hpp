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

#ifndef LCINV_INVARIANTS_HPP
#define LCINV_INVARIANTS_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "lcinv/clifford.hpp"
#include "lcinv/normal_form.hpp"
#include "lcinv/orbits.hpp"
#include "lcinv/pauli.hpp"

namespace lcinv {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Dense n-qubit Pauli sigma_w (qubit 1 on the most significant index bit).
Matrix sigma_dense(const PauliIndex &w);
// Dense sigma of an r-position tuple over one qubit each.
Matrix sigma_dense(const PairTuple &t);

// Default cap on dense dimensions 2^{nr}; build_A_gamma and the matrix
// evaluation path refuse above it. Override via LCINV_MAX_DENSE.
int dense_dim_cap();

// The change of variables x_w = Tr(rho * sigma_w), all 4^n entries,
// indexed by the flat label (u-block high bits).
struct XTable {
  int n = 0;
  std::vector<Complex> x;
  Complex at(const PauliIndex &w) const { return x[w.flat()]; }
};
XTable x_transform(const Matrix &rho, int n);

// Inverse relation rho = 2^{-n} sum_w x_w sigma_w.
Matrix rho_from_x(const XTable &xt);

// Exact polynomial evaluation: sum over the Cartesian product of per-qubit
// orbit members of prod_j x_{w^(j)}, in canonical member order. No
// normalization; equals Tr(A_gamma rho^{tensor r}).
Complex eval_gamma(const XTable &xt, const GammaTuple &g);
Complex eval_gamma(const XTable &xt, const OrbitMatrix &m);

// Per-qubit plain orbit sum A_Gamma = sum_{t in Gamma} sigma_t (2^r dense).
Matrix build_A_orbit(const OrbitDescriptor &d);

// Invariant-candidate basis matrix of an n-tuple of orbits, dimension
// 2^{nr}, built by conjugating the tensor product of per-qubit orbit sums
// with the qubit-major -> copy-major index permutation.
Matrix build_A_gamma(const GammaTuple &g);
// Same matrix assembled directly as sum over member tuples of
// sigma_{w^(1)} x ... x sigma_{w^(r)}; cross-check route.
Matrix build_A_gamma_direct(const GammaTuple &g);

// Tr(A_gamma * rho^{tensor r}); oracle for eval_gamma.
Complex eval_via_matrix(const Matrix &rho, const GammaTuple &g);

// Average of U^{tensor r} A U^{tensor r dag} over the 24 effective
// single-qubit Clifford elements (equals the full group average).
// Requires A of dimension 2^r with r <= averaging cap (default 4).
Matrix averaging_operator(int r, const Matrix &A);

// 4-tuple (l0,l1,l2,l3) with l0+l1+l2+l3 = r, l1 >= l2 >= l3 and l1,l2,l3
// all even or all odd.
struct LambdaTuple {
  int l0 = 0, l1 = 0, l2 = 0, l3 = 0;
  int r() const { return l0 + l1 + l2 + l3; }
  bool valid() const;
};

// p_r^lambda = x00^{l0} sum over all 6 permutations pi of
// x01^{l_pi(1)} x10^{l_pi(2)} x11^{l_pi(3)}, repeats included. n = 1 only.
Complex p_lambda(const XTable &xt, const LambdaTuple &lam);
std::vector<LambdaTuple> enumerate_lambda(int r);

// Degree-2 invariants over a qubit subset omega (bitmask, qubit i at bit
// n-i to match PauliIndex):
//   p_omega = sum over supp(w) == omega of x_w^2
//   q_omega = sum over supp(w) <= omega of x_w^2
// q_omega equals 2^{|omega|} * Tr{(partial trace onto omega of rho)^2}.
Complex degree2_p(const XTable &xt, uint64_t omega_mask);
Complex degree2_q(const XTable &xt, uint64_t omega_mask);

// Partial trace keeping the qubits in `keep` (bitmask as above); the kept
// qubits retain their relative order. Tracing everything out gives the 1x1
// matrix [Tr rho].
Matrix partial_trace(const Matrix &rho, int n, uint64_t keep_mask);

// Alternating triple sum of products of partial traces attached to a
// degree-3 orbit tuple. Each partial trace is padded back to n qubits with
// the maximally mixed state on its complement before multiplying, which
// makes the sum land on a fixed 2^{-2n} multiple of the phase-twisted
// orbit sum: the ratio to eval_gamma is 2^{-2n} whenever every row has an
// even label-class structure, and 0 when exactly one row is all-odd.
Complex degree3_lu_form(const Matrix &rho, const GammaTuple &g);

// True iff the orbit's three label classes all have odd size. Invariants
// whose tuples contain such rows are the ones that pick up the conjugation
// permutation-parity sign.
bool all_odd_orbit(const OrbitDescriptor &d);
std::vector<int> all_odd_rows(const OrbitMatrix &m);  // 1-based row indices

}  // namespace lcinv

#endif  // LCINV_INVARIANTS_HPP
