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

#include "lcinv/fingerprint.hpp"

#include <bit>
#include <cmath>
#include <mutex>
#include <map>
#include <stdexcept>

#include "lcinv/parallel.hpp"

namespace lcinv {

namespace {

int symplectic_product(const PauliIndex &a, const PauliIndex &b) {
  return (std::popcount(a.u & b.v) ^ std::popcount(a.v & b.u)) & 1;
}

bool gf2_independent(const std::vector<PauliIndex> &rows, int n) {
  std::vector<uint64_t> basis;
  for (const auto &w : rows) {
    uint64_t v = (w.u << n) | w.v;
    for (uint64_t b : basis) v = std::min(v, v ^ b);
    if (v == 0) return false;
    basis.push_back(v);
  }
  return true;
}

// cached normal-form bases keyed by (n, r)
const std::vector<OrbitMatrix> &basis_for(int n, int r) {
  static std::map<std::pair<int, int>, std::vector<OrbitMatrix>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, r);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_normal_forms(n, r)).first;
  return it->second;
}

}  // namespace

void StabilizerCode::validate() const {
  if (k() > n) throw std::invalid_argument("stabilizer: more generators than qubits");
  if (int(signs.size()) != k()) throw std::invalid_argument("stabilizer: sign count mismatch");
  for (int i = 0; i < k(); ++i) {
    if (rows[size_t(i)].n != n)
      throw std::invalid_argument("stabilizer: generator " + std::to_string(i + 1) +
                                  " has the wrong qubit count");
    if (signs[size_t(i)] != 1 && signs[size_t(i)] != -1)
      throw std::invalid_argument("stabilizer: sign of generator " + std::to_string(i + 1) +
                                  " must be +1 or -1");
    for (int j = 0; j < i; ++j)
      if (symplectic_product(rows[size_t(i)], rows[size_t(j)]) != 0)
        throw std::invalid_argument("stabilizer: generators " + std::to_string(j + 1) + " and " +
                                    std::to_string(i + 1) + " do not commute");
  }
  if (!gf2_independent(rows, n))
    throw std::invalid_argument("stabilizer: generators are GF(2)-dependent");
}

Matrix projector(const StabilizerCode &code) {
  code.validate();
  const int64_t d = int64_t(1) << code.n;
  if (d > dense_dim_cap())
    throw std::length_error("projector: 2^n exceeds the dense cap");
  Matrix p = Matrix::Identity(d, d);
  for (int i = 0; i < code.k(); ++i) {
    Matrix s = sigma_dense(code.rows[size_t(i)]);
    p = 0.5 * (p + double(code.signs[size_t(i)]) * (p * s));
  }
  return p;
}

namespace {

Fingerprint fingerprint_impl(const Matrix &rho, int max_degree, bool parallel) {
  const int64_t d = rho.rows();
  if (d != rho.cols() || d == 0 || (d & (d - 1)) != 0)
    throw std::invalid_argument("fingerprint: matrix dimension is not a power of two");
  int n = std::countr_zero(uint64_t(d));
  if (n == 0) throw std::invalid_argument("fingerprint: need at least one qubit");
  if (max_degree < 1) throw std::invalid_argument("fingerprint: max_degree must be >= 1");
  Fingerprint fp;
  fp.n = n;
  fp.max_degree = max_degree;
  XTable xt = x_transform(rho, n);
  for (int r = 1; r <= max_degree; ++r) {
    const auto &basis = basis_for(n, r);
    std::vector<Complex> vals(basis.size());
    std::vector<GammaTuple> gammas(basis.size());
    for (size_t b = 0; b < basis.size(); ++b) gammas[b] = gamma_from_matrix(basis[b]);
    if (parallel) {
      parallel_for(int64_t(basis.size()),
                   [&](int64_t b) { vals[size_t(b)] = eval_gamma(xt, gammas[size_t(b)]); });
    } else {
      for (size_t b = 0; b < basis.size(); ++b) vals[b] = eval_gamma(xt, gammas[b]);
    }
    fp.entries.push_back(std::move(vals));
  }
  return fp;
}

}  // namespace

Fingerprint fingerprint(const Matrix &rho, int max_degree) {
  return fingerprint_impl(rho, max_degree, true);
}

Fingerprint fingerprint_serial(const Matrix &rho, int max_degree) {
  return fingerprint_impl(rho, max_degree, false);
}

std::string CompareResult::to_string(int max_degree) const {
  if (verdict == Verdict::distinct)
    return "DISTINCT (degree " + std::to_string(degree) + ", entry " + std::to_string(index) +
           ", deviation " + std::to_string(deviation) + ")";
  return "INDISTINGUISHABLE(max_degree=" + std::to_string(max_degree) + ")";
}

CompareResult compare(const Fingerprint &a, const Fingerprint &b, double tol) {
  if (a.n != b.n || a.max_degree != b.max_degree)
    throw std::invalid_argument("compare: fingerprint shapes differ");
  CompareResult res{Verdict::indistinguishable, 0, 0, 0.0};
  for (int r = 1; r <= a.max_degree; ++r) {
    const auto &ea = a.entries[size_t(r - 1)];
    const auto &eb = b.entries[size_t(r - 1)];
    if (ea.size() != eb.size()) throw std::invalid_argument("compare: entry counts differ");
    for (size_t i = 0; i < ea.size(); ++i) {
      double dev = std::abs(ea[i] - eb[i]);
      double scale = 1.0 + std::max(std::abs(ea[i]), std::abs(eb[i]));
      if (dev > tol * scale) {
        if (res.verdict == Verdict::indistinguishable || dev > res.deviation) {
          res.verdict = Verdict::distinct;
          res.degree = r;
          res.index = int(i);
          res.deviation = dev;
        }
      }
    }
  }
  return res;
}

}  // namespace lcinv
