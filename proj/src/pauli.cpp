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

#include "lcinv/pauli.hpp"

#include <stdexcept>

namespace lcinv {

PauliIndex PauliIndex::operator+(const PauliIndex &o) const {
  if (n != o.n) throw std::invalid_argument("PauliIndex addition: qubit counts differ");
  return PauliIndex(n, u ^ o.u, v ^ o.v);
}

bool PauliIndex::operator<(const PauliIndex &o) const {
  if (n != o.n) return n < o.n;
  if (u != o.u) return u < o.u;
  return v < o.v;
}

std::string PauliIndex::to_string(bool separator) const {
  std::string s;
  s.reserve(size_t(2 * n) + 1);
  for (int i = 1; i <= n; ++i) s += char('0' + ((u >> (n - i)) & 1));
  if (separator) s += '|';
  for (int i = 1; i <= n; ++i) s += char('0' + ((v >> (n - i)) & 1));
  return s;
}

PauliIndex PauliIndex::parse(const std::string &text) {
  std::string bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '|' || c == ' ') continue;
    if (c != '0' && c != '1')
      throw std::invalid_argument("Pauli label: unexpected character '" + std::string(1, c) + "'");
    bits += c;
  }
  if (bits.empty() || bits.size() % 2 != 0)
    throw std::invalid_argument("Pauli label: need an even number of bits, got " +
                                std::to_string(bits.size()));
  int n = int(bits.size() / 2);
  if (n > 32) throw std::invalid_argument("Pauli label: at most 32 qubits supported");
  PauliIndex w(n, 0, 0);
  for (int i = 1; i <= n; ++i) {
    w.u |= uint64_t(bits[i - 1] - '0') << (n - i);
    w.v |= uint64_t(bits[n + i - 1] - '0') << (n - i);
  }
  return w;
}

std::vector<int> support(const PauliIndex &w) {
  std::vector<int> out;
  for (int i = 1; i <= w.n; ++i)
    if (w.pair(i) != 0) out.push_back(i);
  return out;
}

std::string PairTuple::to_string() const {
  static const char *names[4] = {"I", "X", "Z", "Y"};
  std::string s;
  for (uint8_t c : pair) {
    if (!s.empty()) s += ',';
    s += names[c];
  }
  return "(" + s + ")";
}

bool in_Vr(const PairTuple &t) {
  int su = 0, sv = 0;
  for (uint8_t c : t.pair) {
    su ^= (c >> 1) & 1;
    sv ^= c & 1;
  }
  return su == 0 && sv == 0;
}

EtaSets eta_sets(const PairTuple &t) {
  EtaSets s;
  for (int j = 1; j <= t.r(); ++j) {
    switch (t.pair[j - 1]) {
      case 0: s.eta0.push_back(j); break;
      case 1: s.eta_x.push_back(j); break;
      case 2: s.eta_z.push_back(j); break;
      case 3: s.eta_y.push_back(j); break;
    }
  }
  return s;
}

}  // namespace lcinv
