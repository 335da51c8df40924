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

#ifndef LCINV_VERIFY_HPP
#define LCINV_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lcinv {

struct PropertyResult {
  std::string name;
  bool pass;
  std::string detail;  // measured residuals, constants, counterexamples
};

struct VerifyReport {
  std::vector<PropertyResult> results;
  bool all_pass() const;
};

// Runs every library property at the given size and reports pass/fail with
// measured residuals, including the per-orbit averaging constants and the
// degree-3 ratio constants. Some properties are known to fail at sizes
// where the all-odd-orbit sign twist or normal-form ambiguity kicks in;
// the report states which.
VerifyReport verify_suite(int n, int r, int trials, uint64_t seed);

void print_report(std::ostream &out, const VerifyReport &report);

}  // namespace lcinv

#endif  // LCINV_VERIFY_HPP
