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

#include "lcinv/cli.hpp"

#include <ostream>
#include <sstream>

#include "lcinv/fingerprint.hpp"
#include "lcinv/formats.hpp"
#include "lcinv/invariants.hpp"
#include "lcinv/parallel.hpp"
#include "lcinv/verify.hpp"

namespace lcinv {

namespace {

OrbitMatrix parse_gamma_digits(const std::string &text) {
  std::vector<std::string> rows;
  std::string cur;
  for (char c : text) {
    if (c == '/') {
      rows.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  rows.push_back(cur);
  if (rows.empty() || rows[0].empty())
    throw std::invalid_argument("field gamma: expected digit rows joined by '/'");
  OrbitMatrix m(int(rows.size()), int(rows[0].size()));
  for (int i = 1; i <= m.n; ++i) {
    if (int(rows[size_t(i - 1)].size()) != m.r)
      throw std::invalid_argument("field gamma: rows have unequal lengths");
    for (int j = 1; j <= m.r; ++j) {
      char c = rows[size_t(i - 1)][size_t(j - 1)];
      if (c < '0' || c > '3')
        throw std::invalid_argument("field gamma: digit '" + std::string(1, c) + "' not in 0..3");
      m.at(i, j) = uint8_t(c - '0');
    }
  }
  if (!m.parity_valid()) throw std::invalid_argument("field gamma: row parity violated");
  return m;
}

int cmd_orbits(const RunConfig &cfg, std::ostream &out) {
  auto orbits = enumerate_Or(cfg.r);
  out << orbits.size() << "\n";
  if (cfg.list)
    for (const auto &d : orbits)
      out << d.to_string() << " size=" << orbit_members(d).size() << "\n";
  return 0;
}

int cmd_dims(const RunConfig &cfg, std::ostream &out) {
  if (cfg.method == "enumeration" || cfg.method == "burnside") {
    CountMethod m = cfg.method == "enumeration" ? CountMethod::enumeration : CountMethod::burnside;
    out << count_dnr(cfg.n, cfg.r, m).str() << "\n";
  } else {
    BigInt en = count_dnr(cfg.n, cfg.r, CountMethod::enumeration);
    BigInt bu = count_dnr(cfg.n, cfg.r, CountMethod::burnside);
    out << "enumeration " << en.str() << "\n";
    out << "burnside " << bu.str() << "\n";
  }
  if (cfg.bounds) {
    DnrBounds b = bounds_dnr(cfg.n, cfg.r);
    out << "lower " << b.lower_num.str() << "/" << b.lower_den.str() << "\n";
    out << "upper " << b.upper.str() << "\n";
  }
  return 0;
}

int cmd_normal_forms(const RunConfig &cfg, std::ostream &out) {
  for (const auto &m : enumerate_normal_forms(cfg.n, cfg.r)) out << m.digits() << "\n";
  return 0;
}

int cmd_canon(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  OrbitMatrix m = read_orbit_matrix_file(cfg.matrix_path);
  try {
    OrbitMatrix c = canonicalize(m);
    out << c.n << " " << c.r << "\n" << c.to_string();
    return 0;
  } catch (const NormalFormAmbiguity &a) {
    err << "canonicalize: class contains " << a.survivors.size() << " normal forms:\n";
    for (const auto &sv : a.survivors) err << "  " << sv.digits() << "\n";
    return 1;
  }
}

int cmd_eval(const RunConfig &cfg, std::ostream &out) {
  int n = 0;
  Matrix rho = read_matrix_file(cfg.input_path, &n);
  if (n < 1) throw std::invalid_argument("field n: eval needs at least one qubit");
  XTable xt = x_transform(rho, n);
  if (!cfg.gamma.empty()) {
    OrbitMatrix m = parse_gamma_digits(cfg.gamma);
    if (m.n != n)
      throw std::invalid_argument("field gamma: row count differs from the input qubit count");
    Complex v = eval_gamma(xt, m);
    out << m.digits() << " " << format_complex(v) << "\n";
    return 0;
  }
  auto basis = enumerate_normal_forms(n, cfg.r);
  std::vector<Complex> vals(basis.size());
  std::vector<GammaTuple> gammas(basis.size());
  for (size_t b = 0; b < basis.size(); ++b) gammas[b] = gamma_from_matrix(basis[b]);
  parallel_for(int64_t(basis.size()),
               [&](int64_t b) { vals[size_t(b)] = eval_gamma(xt, gammas[size_t(b)]); });
  for (size_t b = 0; b < basis.size(); ++b)
    out << basis[b].digits() << " " << format_complex(vals[b]) << "\n";
  return 0;
}

Fingerprint load_fingerprint(const RunConfig &cfg, const std::string &path, bool stabilizer) {
  Matrix rho;
  if (stabilizer) {
    rho = projector(read_stabilizer_file(path));
  } else {
    int n = 0;
    rho = read_matrix_file(path, &n);
  }
  return fingerprint(rho, cfg.max_degree);
}

int cmd_fingerprint(const RunConfig &cfg, std::ostream &out) {
  bool stab = !cfg.stabilizer_path.empty();
  if (stab == !cfg.input_path.empty())
    throw std::invalid_argument("fingerprint: give exactly one of --stabilizer or --input");
  Fingerprint fa = load_fingerprint(cfg, stab ? cfg.stabilizer_path : cfg.input_path, stab);
  auto print_fp = [&](const Fingerprint &f) {
    for (int r = 1; r <= f.max_degree; ++r) {
      const auto &basis = enumerate_normal_forms(f.n, r);
      for (size_t i = 0; i < f.entries[size_t(r - 1)].size(); ++i)
        out << basis[i].digits() << " " << format_complex(f.entries[size_t(r - 1)][i]) << "\n";
    }
  };
  print_fp(fa);
  if (!cfg.compare_path.empty()) {
    Fingerprint fb = load_fingerprint(cfg, cfg.compare_path, stab);
    CompareResult res = compare(fa, fb, cfg.tol);
    out << (res.verdict == Verdict::distinct
                ? "DISTINCT"
                : "INDISTINGUISHABLE(max_degree=" + std::to_string(cfg.max_degree) + ")")
        << "\n";
  }
  return 0;
}

int cmd_check(const RunConfig &cfg, std::ostream &out) {
  VerifyReport rep = verify_suite(cfg.n, cfg.r, cfg.trials, cfg.seed);
  print_report(out, rep);
  return rep.all_pass() ? 0 : 1;
}

int cmd_action_table(std::ostream &out) {
  static const char *names[4] = {"I", "X", "Z", "Y"};
  out << "# idx Q a01 a10   X->   Z->   Y->\n";
  const auto &elems = enumerate_effective_C1();
  for (size_t i = 0; i < elems.size(); ++i) {
    const auto &c = elems[i];
    std::ostringstream line;
    line << i << " " << c.q << " " << (c.alpha01 > 0 ? "+" : "-") << " "
         << (c.alpha10 > 0 ? "+" : "-");
    for (int p : {1, 2, 3}) {
      auto cp = conjugate_pauli(c, p);
      line << "   " << (cp.sign > 0 ? "+" : "-") << names[cp.code];
    }
    out << line.str() << "\n";
  }
  return 0;
}

}  // namespace

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
  set_threads(config.threads);
  if (config.command == "orbits") return cmd_orbits(config, out);
  if (config.command == "dims") return cmd_dims(config, out);
  if (config.command == "normal-forms") return cmd_normal_forms(config, out);
  if (config.command == "canon") return cmd_canon(config, out, err);
  if (config.command == "eval") return cmd_eval(config, out);
  if (config.command == "fingerprint") return cmd_fingerprint(config, out);
  if (config.command == "check") return cmd_check(config, out);
  if (config.command == "action-table") return cmd_action_table(out);
  throw std::invalid_argument("unknown command: " + config.command);
}

}  // namespace lcinv
