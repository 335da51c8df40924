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

#ifndef LCINV_PARALLEL_HPP
#define LCINV_PARALLEL_HPP

#include <cstdint>

namespace lcinv {

// Worker count for the OpenMP kernels; 0 keeps the runtime default.
// Results are bit-identical for every setting: parallel loops write into
// preassigned slots and all randomness is drawn before the loops.
void set_threads(int count);
int thread_count();

// Static-schedule parallel loop over [0, count) writing through `body(i)`.
// Serial when built without OpenMP.
template <typename F>
void parallel_for(int64_t count, F &&body);

}  // namespace lcinv

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lcinv {

template <typename F>
void parallel_for(int64_t count, F &&body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (int64_t i = 0; i < count; ++i) body(i);
#else
  for (int64_t i = 0; i < count; ++i) body(i);
#endif
}

}  // namespace lcinv

#endif  // LCINV_PARALLEL_HPP
