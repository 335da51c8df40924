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

#ifndef LCINV_PAULI_HPP
#define LCINV_PAULI_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lcinv {

// A phase-free n-qubit Pauli label (u, v) over GF(2).
// Convention: u is the Z-part, v is the X-part, so (0,0)=I, (0,1)=X,
// (1,0)=Z, (1,1)=Y per qubit. Qubit 1 sits at the most significant bit of
// each n-bit mask; the textual form is the u-block then the v-block with
// qubit 1 first ("10|01" means u=(1,0), v=(0,1)).
struct PauliIndex {
  int n = 0;
  uint64_t u = 0;
  uint64_t v = 0;

  PauliIndex() = default;
  PauliIndex(int n_, uint64_t u_, uint64_t v_) : n(n_), u(u_), v(v_) {}

  // Componentwise XOR; the group operation on labels.
  PauliIndex operator+(const PauliIndex &o) const;
  bool operator==(const PauliIndex &o) const {
    return n == o.n && u == o.u && v == o.v;
  }
  bool operator<(const PauliIndex &o) const;

  // Per-qubit pair code (u_i<<1 | v_i) for qubit i in 1..n.
  int pair(int i) const {
    int shift = n - i;
    return int(((u >> shift) & 1) << 1 | ((v >> shift) & 1));
  }
  void set_pair(int i, int code) {
    int shift = n - i;
    u = (u & ~(uint64_t(1) << shift)) | (uint64_t((code >> 1) & 1) << shift);
    v = (v & ~(uint64_t(1) << shift)) | (uint64_t(code & 1) << shift);
  }

  // Flat index u-block first: (u << n) | v. Used by XTable.
  uint64_t flat() const { return (u << n) | v; }
  static PauliIndex from_flat(int n, uint64_t f) {
    uint64_t mask = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    return PauliIndex(n, (f >> n) & mask, f & mask);
  }

  std::string to_string(bool separator = true) const;
  // Accepts 2n bit characters with an optional '|' between the blocks.
  static PauliIndex parse(const std::string &text);
};

// Qubit positions (1-based) where the label is not the identity.
std::vector<int> support(const PauliIndex &w);

// An element of GF(2)^{2r}: r pairs (u_j, v_j), stored as pair codes
// (u<<1|v) in {0,1,2,3}. Position indices are 1-based externally.
struct PairTuple {
  std::vector<uint8_t> pair;  // codes, position j at pair[j-1]

  PairTuple() = default;
  explicit PairTuple(std::vector<uint8_t> codes) : pair(std::move(codes)) {}

  int r() const { return int(pair.size()); }
  bool operator==(const PairTuple &o) const { return pair == o.pair; }
  bool operator<(const PairTuple &o) const { return pair < o.pair; }

  std::string to_string() const;
};

// True iff the componentwise XOR of all r pairs is (0,0). Equivalently the
// counts of X, Y and Z entries are all even or all odd.
bool in_Vr(const PairTuple &t);

// Positions (1-based) holding pair (0,0), (0,1), (1,1), (1,0) respectively.
struct EtaSets {
  std::vector<int> eta0, eta_x, eta_y, eta_z;
};
EtaSets eta_sets(const PairTuple &t);

}  // namespace lcinv

#endif  // LCINV_PAULI_HPP
