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

#ifndef LCINV_RANDOM_HPP
#define LCINV_RANDOM_HPP

#include <random>

#include "lcinv/invariants.hpp"

namespace lcinv {

// Arbitrary complex matrix with iid standard-normal real and imaginary
// parts. No hermiticity; invariance under conjugation does not need it.
Matrix random_complex_matrix(int dim, std::mt19937_64 &rng);

// Haar-random U(2) via QR of a Gaussian with the R-diagonal phase fix.
Eigen::Matrix2cd haar_u2(std::mt19937_64 &rng);

// Tensor product of n independent Haar U(2) factors, qubit 1 leftmost.
Matrix haar_product_unitary(int n, std::mt19937_64 &rng);

}  // namespace lcinv

#endif  // LCINV_RANDOM_HPP
