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

#ifndef LCINV_NORMAL_FORM_HPP
#define LCINV_NORMAL_FORM_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcinv/orbits.hpp"

namespace lcinv {

using BigInt = boost::multiprecision::cpp_int;

// An n x r matrix over {0,1,2,3} encoding an n-tuple of orbits: entry 0
// marks an identity position of row i's orbit, equal nonzero entries mark
// positions in the same label class. The nonzero labels are arbitrary per
// row; column order is arbitrary. Row-major storage.
struct OrbitMatrix {
  int n = 0, r = 0;
  std::vector<uint8_t> e;

  OrbitMatrix() = default;
  OrbitMatrix(int n_, int r_) : n(n_), r(r_), e(size_t(n_) * r_, 0) {}

  uint8_t &at(int i, int j) { return e[size_t(i - 1) * r + (j - 1)]; }  // 1-based
  uint8_t at(int i, int j) const { return e[size_t(i - 1) * r + (j - 1)]; }

  bool operator==(const OrbitMatrix &o) const {
    return n == o.n && r == o.r && e == o.e;
  }
  bool operator<(const OrbitMatrix &o) const { return e < o.e; }

  // Row parity: per row, the counts of labels 1, 2, 3 are all even or all odd.
  bool parity_valid() const;

  // Digit grid, one row per line.
  std::string to_string() const;
  // Compact single-line form, rows joined by '/'.
  std::string digits() const;
};

using GammaTuple = std::vector<OrbitDescriptor>;  // n descriptors, common r

// Fixed labeling rule: the part with the smallest minimum element gets
// label 1, the next 2, then 3; empty parts take the leftover labels in
// order. Throws std::invalid_argument if a descriptor violates parity.
OrbitMatrix matrix_from_gamma(const GammaTuple &g);
GammaTuple gamma_from_matrix(const OrbitMatrix &m);

// The vector u_i^{(a)}: component m (an (i-1)-digit base-4 index, most
// significant digit first) counts columns j whose rows 1..i-1 read m and
// whose row-i entry is a. Requires 2 <= i <= n; a in {1,2,3}.
std::vector<int> u_vector(const OrbitMatrix &m, int i, int a);

// Normal-form predicate: columns lexicographically non-decreasing,
// |eta3| <= |eta2| <= |eta1| on row 1, u_i^{(3)} <=lex u_i^{(2)} <=lex
// u_i^{(1)} for rows 2..n, and row parity.
bool is_normal_form(const OrbitMatrix &m);

// Raised when the canonical search finds zero or more than one normal form
// in an equivalence class; carries all survivors.
struct NormalFormAmbiguity : std::runtime_error {
  std::vector<OrbitMatrix> survivors;
  explicit NormalFormAmbiguity(std::vector<OrbitMatrix> s);
};

// Canonicalization under column permutations and per-row relabelings of
// {1,2,3}: enumerates all 6^n row relabelings, sorts columns, keeps the
// normal forms. Returns the survivor if it is unique; throws
// NormalFormAmbiguity otherwise (classes with several normal forms exist,
// the smallest at n=2, r=3).
OrbitMatrix canonicalize(const OrbitMatrix &m);

// Distinct normal forms found by the canonical search (sorted). Never empty
// for a parity-valid input.
std::vector<OrbitMatrix> canonical_survivors(const OrbitMatrix &m);

// Resource limits for the counting routines; all overridable.
struct CountLimits {
  long long max_cells = 24;         // enumeration: n*r cap
  long long max_scan = 400000000;   // enumeration: candidate-row combinations
  int burnside_max_r = 10;
  int burnside_max_n = 6;
};
CountLimits default_count_limits();  // honors LCINV_MAX_CELLS / LCINV_MAX_SCAN env overrides

// All normal forms in lexicographic (row-major digit) order; this order
// indexes the invariant basis everywhere else.
std::vector<OrbitMatrix> enumerate_normal_forms(int n, int r);
std::vector<OrbitMatrix> enumerate_normal_forms_serial(int n, int r);

enum class CountMethod { enumeration, burnside };

// enumeration: scan all parity-valid matrices and count the normal forms.
// burnside: average fixed-point counts of the column-permutation x row-
// relabeling group over parity-valid matrices, i.e. the number of
// equivalence classes. The two disagree wherever classes hold more than
// one normal form. Throws std::length_error beyond the limits.
BigInt count_dnr(int n, int r, CountMethod method,
                 const CountLimits &limits = default_count_limits());

// Exact bracket: lower = (4^{r-1}+3*2^{r-1}+2)^n / (6^n r!) as a reduced
// rational, upper = binom(r + 4^n - 1, r).
struct DnrBounds {
  BigInt lower_num, lower_den;  // reduced fraction
  BigInt upper;
  bool contains(const BigInt &d) const {
    return lower_num <= d * lower_den && d <= upper;
  }
};
DnrBounds bounds_dnr(int n, int r);

// All parity-valid rows of length r as digit strings, lexicographic.
std::vector<std::vector<uint8_t>> parity_valid_rows(int r);

}  // namespace lcinv

#endif  // LCINV_NORMAL_FORM_HPP
