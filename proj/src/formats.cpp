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

#include "lcinv/formats.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace lcinv {

namespace {

std::string next_token(std::istream &in, const char *what) {
  std::string tok;
  if (!(in >> tok)) throw std::invalid_argument(std::string("unexpected end of input: missing ") + what);
  return tok;
}

int parse_int(const std::string &tok, const char *what) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw std::invalid_argument(std::string("field ") + what + ": not an integer: '" + tok + "'");
  }
}

}  // namespace

Matrix read_matrix(std::istream &in, int *n_out) {
  int n = parse_int(next_token(in, "n"), "n");
  if (n < 0 || n > 12) throw std::invalid_argument("field n: out of range 0..12");
  const int64_t d = int64_t(1) << n;
  Matrix m(d, d);
  for (int64_t a = 0; a < d; ++a)
    for (int64_t b = 0; b < d; ++b) {
      std::string tok = next_token(in, "matrix entry");
      size_t comma = tok.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("matrix entry (" + std::to_string(a) + "," +
                                    std::to_string(b) + "): expected re,im, got '" + tok + "'");
      try {
        size_t p1 = 0, p2 = 0;
        double re = std::stod(tok.substr(0, comma), &p1);
        double im = std::stod(tok.substr(comma + 1), &p2);
        if (p1 != comma || p2 != tok.size() - comma - 1) throw std::invalid_argument("");
        m(a, b) = Complex(re, im);
      } catch (...) {
        throw std::invalid_argument("matrix entry (" + std::to_string(a) + "," +
                                    std::to_string(b) + "): malformed number in '" + tok + "'");
      }
    }
  if (n_out) *n_out = n;
  return m;
}

Matrix read_matrix_file(const std::string &path, int *n_out) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read file: " + path);
  return read_matrix(f, n_out);
}

void write_matrix(std::ostream &out, const Matrix &rho, int n) {
  out << n << "\n";
  for (Eigen::Index a = 0; a < rho.rows(); ++a) {
    for (Eigen::Index b = 0; b < rho.cols(); ++b) {
      if (b) out << ' ';
      out << format_double(rho(a, b).real()) << ',' << format_double(rho(a, b).imag());
    }
    out << "\n";
  }
}

StabilizerCode read_stabilizer(std::istream &in) {
  StabilizerCode code;
  code.n = parse_int(next_token(in, "n"), "n");
  int k = parse_int(next_token(in, "k"), "k");
  if (code.n < 1 || code.n > 32) throw std::invalid_argument("field n: out of range 1..32");
  if (k < 0 || k > code.n) throw std::invalid_argument("field k: out of range 0..n");
  for (int i = 0; i < k; ++i) {
    std::string tok = next_token(in, "generator");
    if (tok.empty() || (tok[0] != '+' && tok[0] != '-'))
      throw std::invalid_argument("generator " + std::to_string(i + 1) +
                                  ": must start with '+' or '-'");
    PauliIndex w = PauliIndex::parse(tok.substr(1));
    if (w.n != code.n)
      throw std::invalid_argument("generator " + std::to_string(i + 1) + ": expected " +
                                  std::to_string(2 * code.n) + " bits");
    code.rows.push_back(w);
    code.signs.push_back(tok[0] == '+' ? +1 : -1);
  }
  code.validate();
  return code;
}

StabilizerCode read_stabilizer_file(const std::string &path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read file: " + path);
  return read_stabilizer(f);
}

OrbitMatrix read_orbit_matrix(std::istream &in) {
  int n = parse_int(next_token(in, "n"), "n");
  int r = parse_int(next_token(in, "r"), "r");
  if (n < 1 || n > 8) throw std::invalid_argument("field n: out of range 1..8");
  if (r < 1 || r > 24) throw std::invalid_argument("field r: out of range 1..24");
  OrbitMatrix m(n, r);
  for (int i = 1; i <= n; ++i) {
    std::string row = next_token(in, "matrix row");
    if (int(row.size()) != r)
      throw std::invalid_argument("matrix row " + std::to_string(i) + ": expected " +
                                  std::to_string(r) + " digits, got " + std::to_string(row.size()));
    for (int j = 1; j <= r; ++j) {
      char c = row[size_t(j - 1)];
      if (c < '0' || c > '3')
        throw std::invalid_argument("matrix row " + std::to_string(i) + ": digit '" +
                                    std::string(1, c) + "' not in 0..3");
      m.at(i, j) = uint8_t(c - '0');
    }
  }
  return m;
}

OrbitMatrix read_orbit_matrix_file(const std::string &path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read file: " + path);
  return read_orbit_matrix(f);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex z) {
  return format_double(z.real()) + " " + format_double(z.imag());
}

}  // namespace lcinv
