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

#ifndef LCINV_FORMATS_HPP
#define LCINV_FORMATS_HPP

#include <iosfwd>
#include <string>

#include "lcinv/fingerprint.hpp"
#include "lcinv/invariants.hpp"
#include "lcinv/normal_form.hpp"

namespace lcinv {

// Matrix file: line 1 "n"; then 2^n lines of 2^n whitespace-separated
// entries "re,im" in full decimal. Parse errors throw
// std::invalid_argument with a one-line diagnostic naming the spot.
Matrix read_matrix(std::istream &in, int *n_out);
Matrix read_matrix_file(const std::string &path, int *n_out);
void write_matrix(std::ostream &out, const Matrix &rho, int n);

// Stabilizer file: line 1 "n k"; then k lines "<sign><2n bits>", sign '+'
// or '-', bits u-block then v-block, optional '|' separator.
StabilizerCode read_stabilizer(std::istream &in);
StabilizerCode read_stabilizer_file(const std::string &path);

// Orbit-matrix file: line 1 "n r"; then n lines of r digits in 0..3.
OrbitMatrix read_orbit_matrix(std::istream &in);
OrbitMatrix read_orbit_matrix_file(const std::string &path);

// Full-decimal (17 significant digit) scalar formatting used by all CLI
// output; no locale.
std::string format_double(double v);
std::string format_complex(Complex z);

}  // namespace lcinv

#endif  // LCINV_FORMATS_HPP
