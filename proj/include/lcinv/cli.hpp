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

#ifndef LCINV_CLI_HPP
#define LCINV_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace lcinv {

// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
struct RunConfig {
  std::string command;
  int n = 1;
  int r = 2;
  int max_degree = 3;
  int trials = 20;
  uint64_t seed = 1;
  double tol = 1e-9;
  int threads = 0;  // 0 = runtime default
  bool list = false;
  bool bounds = false;
  std::string method = "both";  // dims: enumeration | burnside | both
  std::string input_path;
  std::string stabilizer_path;
  std::string compare_path;
  std::string matrix_path;
  std::string gamma;  // row digits joined by '/'
  bool eval_all = true;
};

// Deterministic given (config, seed) for any thread count.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

}  // namespace lcinv

#endif  // LCINV_CLI_HPP
