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

#include "lcinv/orbits.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace lcinv {

namespace {

// canonical concrete order for the three parts: by (size, smallest element)
void canonicalize_parts(std::array<uint32_t, 3> &parts) {
  auto key = [](uint32_t p) {
    return std::pair<int, uint32_t>(std::popcount(p), p == 0 ? ~uint32_t(0) : (p & -p));
  };
  std::sort(parts.begin(), parts.end(),
            [&](uint32_t a, uint32_t b) { return key(a) < key(b); });
}

std::string mask_to_set(uint32_t m) {
  std::string s = "{";
  bool first = true;
  for (int j = 0; j < 32; ++j)
    if ((m >> j) & 1) {
      if (!first) s += ',';
      s += std::to_string(j + 1);
      first = false;
    }
  return s + "}";
}

}  // namespace

bool OrbitDescriptor::parity_valid() const {
  int p0 = std::popcount(parts[0]) & 1;
  int p1 = std::popcount(parts[1]) & 1;
  int p2 = std::popcount(parts[2]) & 1;
  return p0 == p1 && p1 == p2;
}

std::string OrbitDescriptor::to_string() const {
  return "eta0=" + mask_to_set(eta0) + " parts={" + mask_to_set(parts[0]) + "|" +
         mask_to_set(parts[1]) + "|" + mask_to_set(parts[2]) + "}";
}

OrbitDescriptor orbit_of(const PairTuple &t) {
  OrbitDescriptor d;
  d.r = t.r();
  std::array<uint32_t, 3> raw{0, 0, 0};  // X, Z, Y position masks
  for (int j = 1; j <= d.r; ++j) {
    int c = t.pair[j - 1];
    if (c == 0)
      d.eta0 |= uint32_t(1) << (j - 1);
    else
      raw[c - 1] |= uint32_t(1) << (j - 1);
  }
  d.parts = raw;
  canonicalize_parts(d.parts);
  return d;
}

std::vector<PairTuple> orbit_members(const OrbitDescriptor &d) {
  // assign the three nonzero pair codes to the three parts in all 6 ways
  static const int label_perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                        {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  std::set<PairTuple> out;
  for (const auto &perm : label_perms) {
    PairTuple t(std::vector<uint8_t>(size_t(d.r), 0));
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < d.r; ++j)
        if ((d.parts[k] >> j) & 1) t.pair[j] = uint8_t(perm[k]);
    out.insert(t);
  }
  return std::vector<PairTuple>(out.begin(), out.end());
}

std::vector<OrbitDescriptor> enumerate_Or(int r) {
  if (r < 1 || r > 12) throw std::invalid_argument("enumerate_Or: r must be in 1..12");
  std::vector<OrbitDescriptor> out;
  const uint32_t full = (uint32_t(1) << r) - 1;
  for (uint32_t eta0 = 0; eta0 <= full; ++eta0) {
    uint32_t rest = full & ~eta0;
    // distribute `rest` into 3 unordered parts: iterate submask pairs and dedupe
    std::set<std::array<uint32_t, 3>> seen;
    for (uint32_t p1 = rest;; p1 = (p1 - 1) & rest) {
      uint32_t r2 = rest & ~p1;
      for (uint32_t p2 = r2;; p2 = (p2 - 1) & r2) {
        std::array<uint32_t, 3> parts{p1, p2, r2 & ~p2};
        canonicalize_parts(parts);
        int s0 = std::popcount(parts[0]) & 1, s1 = std::popcount(parts[1]) & 1,
            s2 = std::popcount(parts[2]) & 1;
        if (s0 == s1 && s1 == s2) seen.insert(parts);
        if (p2 == 0) break;
      }
      if (p1 == 0) break;
    }
    for (const auto &parts : seen) {
      OrbitDescriptor d;
      d.r = r;
      d.eta0 = eta0;
      d.parts = parts;
      out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end(), [](const OrbitDescriptor &a, const OrbitDescriptor &b) {
    int na = std::popcount(a.eta0), nb = std::popcount(b.eta0);
    if (na != nb) return na > nb;
    std::array<int, 3> sa{std::popcount(a.parts[0]), std::popcount(a.parts[1]),
                          std::popcount(a.parts[2])};
    std::array<int, 3> sb{std::popcount(b.parts[0]), std::popcount(b.parts[1]),
                          std::popcount(b.parts[2])};
    std::sort(sa.rbegin(), sa.rend());
    std::sort(sb.rbegin(), sb.rend());
    if (sa != sb) return sa > sb;
    return orbit_members(a).front() < orbit_members(b).front();
  });
  return out;
}

uint64_t count_Or(int r) {
  if (r < 1 || r > 30) throw std::invalid_argument("count_Or: r must be in 1..30");
  uint64_t p4 = uint64_t(1) << (2 * (r - 1));  // 4^{r-1}
  uint64_t p2 = uint64_t(1) << (r - 1);        // 2^{r-1}
  return (p4 + 3 * p2 + 2) / 6;
}

}  // namespace lcinv
