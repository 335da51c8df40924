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

#ifndef LCINV_FINGERPRINT_HPP
#define LCINV_FINGERPRINT_HPP

#include <string>
#include <vector>

#include "lcinv/invariants.hpp"

namespace lcinv {

// A stabilizer group given by k commuting, independent generators with
// signs +-1.
struct StabilizerCode {
  int n = 0;
  std::vector<PauliIndex> rows;
  std::vector<int> signs;

  int k() const { return int(rows.size()); }
  // Throws std::invalid_argument naming the offending pair/row if the
  // generators do not commute or are GF(2)-dependent.
  void validate() const;
};

// rho_S = prod_i (I + s_i sigma_{g_i}) / 2; idempotent, hermitian,
// trace 2^{n-k}.
Matrix projector(const StabilizerCode &code);

// Values of every normal-form basis invariant for degrees 1..max_degree,
// in the canonical enumeration order per degree.
struct Fingerprint {
  int n = 0;
  int max_degree = 0;
  std::vector<std::vector<Complex>> entries;  // entries[r-1]
};

Fingerprint fingerprint(const Matrix &rho, int max_degree);
Fingerprint fingerprint_serial(const Matrix &rho, int max_degree);

enum class Verdict { distinct, indistinguishable };

struct CompareResult {
  Verdict verdict;
  int degree = 0;      // first degree with a difference (when distinct)
  int index = 0;       // basis index of the differing entry (0-based)
  double deviation = 0.0;
  std::string to_string(int max_degree) const;
};

// distinct certifies inequivalence under local Clifford conjugation;
// indistinguishable is NOT a proof of equivalence. Entries a, b differ when
// |a-b| > tol * (1 + max(|a|,|b|)). Throws std::invalid_argument on shape
// mismatch.
CompareResult compare(const Fingerprint &a, const Fingerprint &b, double tol);

}  // namespace lcinv

#endif  // LCINV_FINGERPRINT_HPP
