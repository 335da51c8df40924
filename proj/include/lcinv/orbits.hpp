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

#ifndef LCINV_ORBITS_HPP
#define LCINV_ORBITS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lcinv/pauli.hpp"

namespace lcinv {

// An orbit of the diagonal GL(2,F2) action on GF(2)^{2r}, named by the set
// of identity positions eta0 and the unordered partition of the rest into
// three (possibly empty) label classes. Position j lives at bit (j-1).
// Parts are stored in a canonical concrete order: sorted by (size,
// smallest element), which realizes multiset semantics deterministically.
struct OrbitDescriptor {
  int r = 0;
  uint32_t eta0 = 0;
  std::array<uint32_t, 3> parts{0, 0, 0};

  // Orbit carries a nonzero group-invariant element iff the three part
  // sizes are all even or all odd.
  bool parity_valid() const;

  bool operator==(const OrbitDescriptor &o) const {
    return r == o.r && eta0 == o.eta0 && parts == o.parts;
  }

  // "eta0={...} parts={...|...|...}" with 1-based positions.
  std::string to_string() const;
};

// Classify a tuple into its orbit descriptor.
OrbitDescriptor orbit_of(const PairTuple &t);

// All tuples whose eta-sets realize the descriptor, sorted by pair codes.
// Size is 1, 3 or 6 depending on how many label assignments coincide.
std::vector<PairTuple> orbit_members(const OrbitDescriptor &d);

// All parity-valid orbits of GF(2)^{2r}, in the canonical order:
// |eta0| descending, then part sizes sorted descending (larger first),
// then the lexicographically smallest orbit member. Requires 1 <= r <= 12.
std::vector<OrbitDescriptor> enumerate_Or(int r);

// Closed-form count (4^{r-1} + 3*2^{r-1} + 2)/6. Requires 1 <= r <= 30.
uint64_t count_Or(int r);

}  // namespace lcinv

#endif  // LCINV_ORBITS_HPP
