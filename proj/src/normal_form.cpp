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

#include "lcinv/normal_form.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

#include "lcinv/parallel.hpp"

namespace lcinv {

bool OrbitMatrix::parity_valid() const {
  for (int i = 1; i <= n; ++i) {
    int c[4] = {0, 0, 0, 0};
    for (int j = 1; j <= r; ++j) c[at(i, j)]++;
    if (((c[1] ^ c[2]) & 1) || ((c[2] ^ c[3]) & 1)) return false;
  }
  return true;
}

std::string OrbitMatrix::to_string() const {
  std::string s;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= r; ++j) s += char('0' + at(i, j));
    s += '\n';
  }
  return s;
}

std::string OrbitMatrix::digits() const {
  std::string s;
  for (int i = 1; i <= n; ++i) {
    if (i > 1) s += '/';
    for (int j = 1; j <= r; ++j) s += char('0' + at(i, j));
  }
  return s;
}

OrbitMatrix matrix_from_gamma(const GammaTuple &g) {
  int n = int(g.size());
  int r = g.empty() ? 0 : g[0].r;
  OrbitMatrix m(n, r);
  for (int i = 1; i <= n; ++i) {
    const OrbitDescriptor &d = g[i - 1];
    if (d.r != r) throw std::invalid_argument("matrix_from_gamma: mixed tuple lengths");
    if (!d.parity_valid())
      throw std::invalid_argument("matrix_from_gamma: row " + std::to_string(i) +
                                  " violates the parity condition");
    // smallest-minimum part gets label 1, then 2, then 3; empty parts last
    std::array<uint32_t, 3> parts = d.parts;
    std::sort(parts.begin(), parts.end(), [](uint32_t a, uint32_t b) {
      uint32_t ka = a == 0 ? ~uint32_t(0) : (a & -a);
      uint32_t kb = b == 0 ? ~uint32_t(0) : (b & -b);
      return ka < kb;
    });
    for (int k = 0; k < 3; ++k)
      for (int j = 1; j <= r; ++j)
        if ((parts[k] >> (j - 1)) & 1) m.at(i, j) = uint8_t(k + 1);
  }
  return m;
}

GammaTuple gamma_from_matrix(const OrbitMatrix &m) {
  GammaTuple g;
  g.reserve(m.n);
  for (int i = 1; i <= m.n; ++i) {
    PairTuple t(std::vector<uint8_t>(size_t(m.r), 0));
    for (int j = 1; j <= m.r; ++j) t.pair[j - 1] = m.at(i, j);  // labels as pair codes
    g.push_back(orbit_of(t));
  }
  return g;
}

std::vector<int> u_vector(const OrbitMatrix &m, int i, int a) {
  if (i < 2 || i > m.n) throw std::invalid_argument("u_vector: row index out of range");
  // component index = base-4 value of the column's rows 1..i-1, most
  // significant digit first (lexicographic order of the index vectors)
  std::vector<int> out(size_t(1) << (2 * (i - 1)), 0);
  for (int j = 1; j <= m.r; ++j) {
    if (m.at(i, j) != a) continue;
    size_t sig = 0;
    for (int k = 1; k < i; ++k) sig = sig * 4 + m.at(k, j);
    out[sig]++;
  }
  return out;
}

namespace {

// strict lexicographic a < b for equal-length int vectors
bool lex_less(const std::vector<int> &a, const std::vector<int> &b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool columns_sorted(const OrbitMatrix &m) {
  for (int j = 1; j < m.r; ++j)
    for (int i = 1; i <= m.n; ++i) {
      if (m.at(i, j) < m.at(i, j + 1)) break;
      if (m.at(i, j) > m.at(i, j + 1)) return false;
    }
  return true;
}

void sort_columns(OrbitMatrix &m) {
  std::vector<std::vector<uint8_t>> cols(size_t(m.r), std::vector<uint8_t>(size_t(m.n)));
  for (int j = 1; j <= m.r; ++j)
    for (int i = 1; i <= m.n; ++i) cols[j - 1][i - 1] = m.at(i, j);
  std::sort(cols.begin(), cols.end());
  for (int j = 1; j <= m.r; ++j)
    for (int i = 1; i <= m.n; ++i) m.at(i, j) = cols[j - 1][i - 1];
}

}  // namespace

bool is_normal_form(const OrbitMatrix &m) {
  if (!columns_sorted(m)) return false;
  if (!m.parity_valid()) return false;
  int c[4] = {0, 0, 0, 0};
  for (int j = 1; j <= m.r; ++j) c[m.at(1, j)]++;
  if (!(c[3] <= c[2] && c[2] <= c[1])) return false;
  for (int i = 2; i <= m.n; ++i) {
    std::vector<int> u1 = u_vector(m, i, 1), u2 = u_vector(m, i, 2), u3 = u_vector(m, i, 3);
    if (lex_less(u2, u3) || lex_less(u1, u2)) return false;
  }
  return true;
}

NormalFormAmbiguity::NormalFormAmbiguity(std::vector<OrbitMatrix> s)
    : std::runtime_error("canonicalize: equivalence class contains " + std::to_string(s.size()) +
                         " normal forms"),
      survivors(std::move(s)) {}

std::vector<OrbitMatrix> canonical_survivors(const OrbitMatrix &m) {
  static const uint8_t perms[6][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3},
                                      {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1}};
  int64_t total = 1;
  for (int i = 0; i < m.n; ++i) total *= 6;
  std::set<OrbitMatrix> found;
  for (int64_t idx = 0; idx < total; ++idx) {
    int64_t rem = idx;
    OrbitMatrix c = m;
    for (int i = 1; i <= m.n; ++i) {
      const uint8_t *p = perms[rem % 6];
      rem /= 6;
      for (int j = 1; j <= m.r; ++j) c.at(i, j) = p[m.at(i, j)];
    }
    sort_columns(c);
    if (is_normal_form(c)) found.insert(c);
  }
  return std::vector<OrbitMatrix>(found.begin(), found.end());
}

OrbitMatrix canonicalize(const OrbitMatrix &m) {
  if (!m.parity_valid()) throw std::invalid_argument("canonicalize: parity violation");
  std::vector<OrbitMatrix> s = canonical_survivors(m);
  if (s.size() != 1) throw NormalFormAmbiguity(std::move(s));
  return s.front();
}

std::vector<std::vector<uint8_t>> parity_valid_rows(int r) {
  std::vector<std::vector<uint8_t>> rows;
  std::vector<uint8_t> row(size_t(r), 0);
  while (true) {
    int c[4] = {0, 0, 0, 0};
    for (uint8_t v : row) c[v]++;
    if (!(((c[1] ^ c[2]) & 1) || ((c[2] ^ c[3]) & 1))) rows.push_back(row);
    int j = r - 1;
    while (j >= 0 && row[j] == 3) row[j--] = 0;
    if (j < 0) break;
    row[j]++;
  }
  return rows;
}

namespace {

struct ScanPlan {
  std::vector<std::vector<uint8_t>> rows;
  int64_t combos = 0;
};

ScanPlan plan_scan(int n, int r, const CountLimits &limits) {
  if (n < 1 || r < 1) throw std::invalid_argument("normal forms: need n, r >= 1");
  if (int64_t(n) * r > limits.max_cells)
    throw std::length_error("normal forms: n*r exceeds the cell cap (" +
                            std::to_string(limits.max_cells) + ")");
  ScanPlan p;
  p.rows = parity_valid_rows(r);
  p.combos = 1;
  for (int i = 0; i < n; ++i) {
    p.combos *= int64_t(p.rows.size());
    if (p.combos > limits.max_scan)
      throw std::length_error("normal forms: scan size exceeds the work cap (" +
                              std::to_string(limits.max_scan) + ")");
  }
  return p;
}

OrbitMatrix matrix_at(const ScanPlan &p, int n, int r, int64_t index) {
  OrbitMatrix m(n, r);
  int64_t rem = index;
  for (int i = n; i >= 1; --i) {  // last row varies fastest => row-major lex order
    const auto &row = p.rows[size_t(rem % int64_t(p.rows.size()))];
    rem /= int64_t(p.rows.size());
    for (int j = 1; j <= r; ++j) m.at(i, j) = row[j - 1];
  }
  return m;
}

}  // namespace

std::vector<OrbitMatrix> enumerate_normal_forms_serial(int n, int r) {
  ScanPlan p = plan_scan(n, r, default_count_limits());
  std::vector<OrbitMatrix> out;
  for (int64_t idx = 0; idx < p.combos; ++idx) {
    OrbitMatrix m = matrix_at(p, n, r, idx);
    if (is_normal_form(m)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<OrbitMatrix> enumerate_normal_forms(int n, int r) {
  ScanPlan p = plan_scan(n, r, default_count_limits());
  const int64_t nrows = int64_t(p.rows.size());
  const int64_t block = p.combos / nrows;  // combos of rows 2..n
  std::vector<std::vector<OrbitMatrix>> hits(size_t(nrows));
  parallel_for(nrows, [&](int64_t first) {
    auto &local = hits[size_t(first)];
    for (int64_t k = 0; k < block; ++k) {
      OrbitMatrix m = matrix_at(p, n, r, first * block + k);
      if (is_normal_form(m)) local.push_back(std::move(m));
    }
  });
  std::vector<OrbitMatrix> out;
  for (auto &h : hits)
    for (auto &m : h) out.push_back(std::move(m));
  return out;
}

CountLimits default_count_limits() {
  CountLimits lim;
  if (const char *s = std::getenv("LCINV_MAX_CELLS")) lim.max_cells = std::atoll(s);
  if (const char *s = std::getenv("LCINV_MAX_SCAN")) lim.max_scan = std::atoll(s);
  return lim;
}

namespace {

// partitions of r as non-increasing cycle-length lists, with the count of
// permutations having that cycle type: r! / (prod L_i * prod mult_L!)
void cycle_types(int r, std::vector<std::pair<std::vector<int>, BigInt>> &out) {
  std::vector<int> cur;
  BigInt rfact = 1;
  for (int i = 2; i <= r; ++i) rfact *= i;
  std::function<void(int, int)> rec = [&](int left, int maxlen) {
    if (left == 0) {
      BigInt denom = 1;
      for (int L : cur) denom *= L;
      for (size_t i = 0; i < cur.size();) {
        size_t j = i;
        while (j < cur.size() && cur[j] == cur[i]) ++j;
        for (size_t k = 2; k <= j - i; ++k) denom *= BigInt(uint64_t(k));
        i = j;
      }
      out.emplace_back(cur, rfact / denom);
      return;
    }
    for (int k = std::min(left, maxlen); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(r, r);
}

int apply_perm3(const uint8_t p[4], int v) { return p[v]; }

// number of parity-valid rows fixed by (column permutation of the given
// cycle type, row relabeling pi): assign a consistent value per cycle and
// track the label-count parity vector
uint64_t fixed_rows(const std::vector<int> &ct, const uint8_t pi[4]) {
  uint64_t dp[8] = {1, 0, 0, 0, 0, 0, 0, 0};
  for (int L : ct) {
    uint64_t ndp[8] = {0};
    for (int v = 0; v < 4; ++v) {
      int w = v;
      for (int s = 0; s < L; ++s) w = apply_perm3(pi, w);
      if (w != v) continue;
      int par = 0;
      w = v;
      for (int s = 0; s < L; ++s) {
        if (w > 0) par ^= 1 << (w - 1);
        w = apply_perm3(pi, w);
      }
      for (int st = 0; st < 8; ++st)
        if (dp[st]) ndp[st ^ par] += dp[st];
    }
    std::copy(ndp, ndp + 8, dp);
  }
  return dp[0] + dp[7];
}

}  // namespace

BigInt count_dnr(int n, int r, CountMethod method, const CountLimits &limits) {
  if (n < 1 || r < 1) throw std::invalid_argument("count_dnr: need n, r >= 1");
  if (method == CountMethod::enumeration) {
    ScanPlan p = plan_scan(n, r, limits);
    const int64_t nrows = int64_t(p.rows.size());
    const int64_t block = p.combos / nrows;
    std::vector<int64_t> counts(size_t(nrows), 0);
    parallel_for(nrows, [&](int64_t first) {
      int64_t c = 0;
      for (int64_t k = 0; k < block; ++k)
        if (is_normal_form(matrix_at(p, n, r, first * block + k))) ++c;
      counts[size_t(first)] = c;
    });
    int64_t total = 0;
    for (int64_t c : counts) total += c;
    return BigInt(total);
  }
  if (r > limits.burnside_max_r || n > limits.burnside_max_n)
    throw std::length_error("count_dnr: burnside caps are r <= " +
                            std::to_string(limits.burnside_max_r) + ", n <= " +
                            std::to_string(limits.burnside_max_n));
  static const uint8_t perms[6][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3},
                                      {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1}};
  std::vector<std::pair<std::vector<int>, BigInt>> cts;
  cycle_types(r, cts);
  BigInt total = 0;
  for (const auto &[ct, num] : cts) {
    BigInt persum = 0;
    for (const auto &pi : perms) persum += BigInt(fixed_rows(ct, pi));
    BigInt pw = 1;
    for (int i = 0; i < n; ++i) pw *= persum;
    total += num * pw;
  }
  BigInt denom = 1;
  for (int i = 2; i <= r; ++i) denom *= i;
  for (int i = 0; i < n; ++i) denom *= 6;
  if (total % denom != 0) throw std::logic_error("count_dnr: burnside sum not divisible");
  return total / denom;
}

DnrBounds bounds_dnr(int n, int r) {
  DnrBounds b;
  BigInt base = (BigInt(1) << (2 * (r - 1))) + 3 * (BigInt(1) << (r - 1)) + 2;
  b.lower_num = 1;
  for (int i = 0; i < n; ++i) b.lower_num *= base;
  b.lower_den = 1;
  for (int i = 2; i <= r; ++i) b.lower_den *= i;
  for (int i = 0; i < n; ++i) b.lower_den *= 6;
  BigInt g = boost::multiprecision::gcd(b.lower_num, b.lower_den);
  b.lower_num /= g;
  b.lower_den /= g;
  // binom(r + 4^n - 1, r)
  BigInt m = (BigInt(1) << (2 * n)) - 1 + r;
  b.upper = 1;
  for (int i = 1; i <= r; ++i) {
    b.upper *= (m - r + i);
    b.upper /= i;
  }
  return b;
}

}  // namespace lcinv
