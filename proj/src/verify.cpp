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

#include "lcinv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>
#include <sstream>

#include <Eigen/SVD>

#include "lcinv/fingerprint.hpp"
#include "lcinv/formats.hpp"
#include "lcinv/invariants.hpp"
#include "lcinv/random.hpp"

namespace lcinv {

namespace {

PairTuple tuple_from_code(int r, uint64_t code) {
  PairTuple t(std::vector<uint8_t>(size_t(r), 0));
  for (int j = 0; j < r; ++j) t.pair[size_t(j)] = uint8_t((code >> (2 * j)) & 3);
  return t;
}

struct Suite {
  std::vector<PropertyResult> results;
  void add(const std::string &name, bool pass, const std::string &detail) {
    results.push_back({name, pass, detail});
  }
};

void check_gf2(Suite &s, int r, std::mt19937_64 &rng) {
  // support(w + w') within the union of supports
  bool sub_ok = true;
  for (int t = 0; t < 200; ++t) {
    int n = 1 + int(rng() % 6);
    uint64_t mask = (uint64_t(1) << n) - 1;
    PauliIndex a(n, rng() & mask, rng() & mask), b(n, rng() & mask, rng() & mask);
    auto sup = [](const PauliIndex &w) {
      uint64_t m = 0;
      for (int i : support(w)) m |= uint64_t(1) << i;
      return m;
    };
    if ((sup(a + b) & ~(sup(a) | sup(b))) != 0) sub_ok = false;
  }
  s.add("gf2.support_subadditive", sub_ok, "200 random pairs, n <= 6");

  int rr = std::min(r, 6);
  bool vr_ok = true, part_ok = true;
  for (uint64_t code = 0; code < (uint64_t(1) << (2 * rr)); ++code) {
    PairTuple t = tuple_from_code(rr, code);
    EtaSets e = eta_sets(t);
    int px = int(e.eta_x.size()) & 1, py = int(e.eta_y.size()) & 1, pz = int(e.eta_z.size()) & 1;
    if (in_Vr(t) != (px == py && py == pz)) vr_ok = false;
    if (e.eta0.size() + e.eta_x.size() + e.eta_y.size() + e.eta_z.size() != size_t(rr))
      part_ok = false;
  }
  s.add("gf2.in_Vr_matches_parity", vr_ok, "all 4^" + std::to_string(rr) + " tuples");
  s.add("gf2.eta_sets_partition", part_ok, "all 4^" + std::to_string(rr) + " tuples");
}

void check_clifford(Suite &s) {
  const auto &elems = enumerate_effective_C1();
  bool closure_ok = true;
  for (const auto &a : elems)
    for (const auto &b : elems) {
      SingleClifford c = compose(a, b);
      if (std::find(elems.begin(), elems.end(), c) == elems.end()) closure_ok = false;
    }
  s.add("clifford.closure_24x24", closure_ok, "label-level composition stays in the 24");

  double worst = 0;
  for (const auto &c : elems) {
    const Eigen::Matrix2cd &u = unitary_of(c);
    for (int p = 1; p < 4; ++p) {
      auto cp = conjugate_pauli(c, p);
      PauliIndex lab(1, uint64_t((p >> 1) & 1), uint64_t(p & 1));
      PauliIndex img(1, uint64_t((cp.code >> 1) & 1), uint64_t(cp.code & 1));
      Eigen::Matrix2cd lhs = u * sigma_dense(lab) * u.adjoint();
      Eigen::Matrix2cd rhs = double(cp.sign) * sigma_dense(img);
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  s.add("clifford.faithful_unitaries", worst <= 1e-12,
        "max |dense - label| = " + format_double(worst));
  s.add("clifford.dense_closure_size", dense_closure_size() == 24,
        "closure mod phase has " + std::to_string(dense_closure_size()) + " elements");

  // no duplicate rows in the action table
  std::set<std::string> sigs;
  for (const auto &c : elems) {
    std::string sig;
    for (int p = 1; p < 4; ++p) {
      auto cp = conjugate_pauli(c, p);
      sig += std::to_string(cp.sign * (cp.code + 1)) + ",";
    }
    sigs.insert(sig);
  }
  s.add("clifford.action_table_distinct", sigs.size() == 24,
        std::to_string(sigs.size()) + " distinct action rows");
}

void check_orbits(Suite &s, int r) {
  int rr = std::min(r, 6);
  auto orbits = enumerate_Or(rr);
  bool count_ok = orbits.size() == count_Or(rr);
  s.add("orbits.count_matches_formula", count_ok,
        std::to_string(orbits.size()) + " orbits vs formula " + std::to_string(count_Or(rr)));

  bool closure_ok = true, stable_ok = true, size_ok = true;
  std::set<PairTuple> all_members;
  size_t total = 0;
  for (const auto &d : orbits) {
    auto mem = orbit_members(d);
    total += mem.size();
    if (mem.size() != 1 && mem.size() != 3 && mem.size() != 6) size_ok = false;
    for (const auto &t : mem) {
      all_members.insert(t);
      if (!(orbit_of(t) == d)) stable_ok = false;
      for (const auto &q : gl2_elements()) {
        PairTuple img = t;
        for (auto &c : img.pair) c = uint8_t(q.apply(c));
        if (std::find(mem.begin(), mem.end(), img) == mem.end()) closure_ok = false;
      }
    }
  }
  bool partition_ok = total == all_members.size() && total == (size_t(1) << (2 * (rr - 1)));
  s.add("orbits.closure_under_action", closure_ok, "r = " + std::to_string(rr));
  s.add("orbits.partition_of_Vr", partition_ok,
        std::to_string(total) + " members cover V_r of size " +
            std::to_string(size_t(1) << (2 * (rr - 1))));
  s.add("orbits.descriptor_stable_on_members", stable_ok, "orbit_of constant on each orbit");
  s.add("orbits.member_count_in_136", size_ok, "sizes drawn from {1,3,6}");
}

void check_normal_form(Suite &s, int n, int r, int trials, std::mt19937_64 &rng) {
  auto rows = parity_valid_rows(r);
  int ambiguous = 0, idem_fail = 0, equiv_fail = 0;
  std::string first_ambig;
  for (int t = 0; t < trials; ++t) {
    OrbitMatrix m(n, r);
    for (int i = 1; i <= n; ++i) {
      const auto &row = rows[rng() % rows.size()];
      for (int j = 1; j <= r; ++j) m.at(i, j) = row[size_t(j - 1)];
    }
    auto surv = canonical_survivors(m);
    if (surv.size() != 1) {
      if (++ambiguous == 1) first_ambig = surv.front().digits() + " et al.";
      continue;
    }
    if (canonical_survivors(surv.front()) != surv) ++idem_fail;
    // a shuffled copy must canonicalize to the same form
    OrbitMatrix shuf = m;
    for (int j = r; j > 1; --j) {
      int k = 1 + int(rng() % uint64_t(j));
      for (int i = 1; i <= n; ++i) std::swap(shuf.at(i, j), shuf.at(i, k));
    }
    auto surv2 = canonical_survivors(shuf);
    if (surv2 != surv) ++equiv_fail;
  }
  s.add("normal_form.unique_per_class", ambiguous == 0,
        std::to_string(ambiguous) + "/" + std::to_string(trials) +
            " trials hit multi-form classes" + (ambiguous ? " (" + first_ambig + ")" : ""));
  s.add("normal_form.canonicalize_idempotent", idem_fail == 0,
        std::to_string(idem_fail) + " failures");
  s.add("normal_form.shuffle_equivalence", equiv_fail == 0,
        std::to_string(equiv_fail) + " failures");

  BigInt en = count_dnr(n, r, CountMethod::enumeration);
  BigInt bu = count_dnr(n, r, CountMethod::burnside);
  BigInt nf = BigInt(enumerate_normal_forms(n, r).size());
  s.add("normal_form.count_methods_agree", en == bu && en == nf,
        "enumeration " + en.str() + ", burnside " + bu.str() + ", list " + nf.str());
  DnrBounds b = bounds_dnr(n, r);
  s.add("normal_form.bounds_bracket", b.contains(en) && b.contains(bu),
        "lower " + b.lower_num.str() + "/" + b.lower_den.str() + " <= d <= " + b.upper.str());
}

void check_averaging(Suite &s, int r) {
  int rr = std::min(r, 3);
  double worst_zero = 0;
  bool inside_ok = true;
  std::ostringstream cs;
  std::set<std::string> seen_orbits;
  for (uint64_t code = 0; code < (uint64_t(1) << (2 * rr)); ++code) {
    PairTuple t = tuple_from_code(rr, code);
    Matrix avg = averaging_operator(rr, sigma_dense(t));
    if (!in_Vr(t)) {
      worst_zero = std::max(worst_zero, avg.cwiseAbs().maxCoeff());
      continue;
    }
    OrbitDescriptor d = orbit_of(t);
    Matrix a = build_A_orbit(d);
    Complex c = (a.adjoint() * avg).trace() / (a.adjoint() * a).trace();
    double resid = (avg - c * a).cwiseAbs().maxCoeff() / std::max(avg.cwiseAbs().maxCoeff(), 1e-300);
    bool ok = resid <= 1e-10 && std::abs(c) > 1e-12;
    if (!ok) inside_ok = false;
    if (seen_orbits.insert(d.to_string()).second) {
      cs << "  c[" << d.to_string() << "] = " << format_double(c.real());
      if (!ok) cs << " (NOT a multiple: residual " << format_double(resid) << ")";
      cs << "\n";
    }
  }
  s.add("eval.averaging_zero_outside_Vr", worst_zero <= 1e-10,
        "max entry " + format_double(worst_zero));
  s.add("eval.averaging_orbit_multiple", inside_ok,
        "per-orbit constants at r=" + std::to_string(rr) + ":\n" + cs.str());

  // projector property on a random matrix
  std::mt19937_64 rng(7);
  Matrix A = random_complex_matrix(1 << rr, rng);
  Matrix once = averaging_operator(rr, A);
  Matrix twice = averaging_operator(rr, once);
  double perr = (twice - once).cwiseAbs().maxCoeff();
  s.add("eval.averaging_is_projector", perr <= 1e-10, "|R(R(A)) - R(A)| = " + format_double(perr));
}

void check_eval(Suite &s, int n, int r, int trials, std::mt19937_64 &rng) {
  auto basis = enumerate_normal_forms(n, r);
  std::vector<GammaTuple> gammas;
  for (const auto &m : basis) gammas.push_back(gamma_from_matrix(m));

  // two evaluation routes agree
  double worst2 = 0;
  bool dense_ok = int64_t(1) << (n * r) <= dense_dim_cap();
  if (dense_ok) {
    for (int t = 0; t < std::min(trials, 10); ++t) {
      Matrix rho = random_complex_matrix(1 << n, rng);
      XTable xt = x_transform(rho, n);
      for (const auto &g : gammas) {
        Complex a = eval_gamma(xt, g), b = eval_via_matrix(rho, g);
        worst2 = std::max(worst2, std::abs(a - b) / (1 + std::abs(a)));
      }
    }
    s.add("eval.polynomial_equals_matrix_route", worst2 <= 1e-9,
          "max rel dev " + format_double(worst2));
  }

  // x-transform inverse
  double worstx = 0;
  for (int t = 0; t < 5; ++t) {
    Matrix rho = random_complex_matrix(1 << n, rng);
    worstx = std::max(worstx, (rho_from_x(x_transform(rho, n)) - rho).cwiseAbs().maxCoeff());
  }
  s.add("eval.x_transform_inverse", worstx <= 1e-12, "max dev " + format_double(worstx));

  // column-permutation symmetry of the gamma sum
  double worstp = 0;
  for (int t = 0; t < trials; ++t) {
    Matrix rho = random_complex_matrix(1 << n, rng);
    XTable xt = x_transform(rho, n);
    const OrbitMatrix &m = basis[rng() % basis.size()];
    OrbitMatrix perm = m;
    for (int j = r; j > 1; --j) {
      int k = 1 + int(rng() % uint64_t(j));
      for (int i = 1; i <= n; ++i) std::swap(perm.at(i, j), perm.at(i, k));
    }
    Complex a = eval_gamma(xt, m), b = eval_gamma(xt, perm);
    worstp = std::max(worstp, std::abs(a - b) / (1 + std::abs(a)));
  }
  s.add("eval.permutation_symmetry", worstp <= 1e-9, "max rel dev " + format_double(worstp));

  // invariance under conjugation by effective elements and Haar products
  int cliff_bad = 0, haar_bad = 0;
  std::ostringstream badlist;
  for (size_t bi = 0; bi < basis.size(); ++bi) {
    double worst_c = 0, worst_h = 0;
    for (int t = 0; t < trials; ++t) {
      Matrix rho = random_complex_matrix(1 << n, rng);
      Complex v0 = eval_gamma(x_transform(rho, n), gammas[bi]);
      LocalClifford L = random_local_clifford(n, rng);
      Matrix u = dense_unitary(L);
      Complex v1 = eval_gamma(x_transform(u * rho * u.adjoint(), n), gammas[bi]);
      worst_c = std::max(worst_c, std::abs(v1 - v0) / (1 + std::abs(v0)));
      if (r <= 3) {
        Matrix h = haar_product_unitary(n, rng);
        Complex v2 = eval_gamma(x_transform(h * rho * h.adjoint(), n), gammas[bi]);
        worst_h = std::max(worst_h, std::abs(v2 - v0) / (1 + std::abs(v0)));
      }
    }
    if (worst_c > 1e-9) {
      ++cliff_bad;
      badlist << " " << basis[bi].digits();
    }
    if (r <= 3 && worst_h > 1e-9) ++haar_bad;
  }
  s.add("eval.clifford_invariance", cliff_bad == 0,
        std::to_string(cliff_bad) + "/" + std::to_string(basis.size()) +
            " basis elements vary under conjugation" +
            (cliff_bad ? " (all-odd rows):" + badlist.str() : ""));
  if (r <= 3)
    s.add("eval.haar_invariance", haar_bad == 0,
          std::to_string(haar_bad) + "/" + std::to_string(basis.size()) +
              " basis elements vary under product unitaries");

  // rank of the evaluation matrix
  {
    int d = int(basis.size());
    int N = d + 10;
    Matrix E(N, d);
    for (int a = 0; a < N; ++a) {
      Matrix rho = random_complex_matrix(1 << n, rng);
      XTable xt = x_transform(rho, n);
      for (int b = 0; b < d; ++b) E(a, b) = eval_gamma(xt, gammas[size_t(b)]);
    }
    Eigen::JacobiSVD<Matrix> svd(E);
    auto sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > sv(0) * 1e-9) ++rank;
    s.add("eval.rank_equals_basis_size", rank == d,
          "numerical rank " + std::to_string(rank) + " vs " + std::to_string(d) +
              " normal forms (rank = class count; duplicates collapse)");
  }

  // moebius relations between the degree-2 families
  {
    double worstm = 0;
    Matrix rho = random_complex_matrix(1 << n, rng);
    XTable xt = x_transform(rho, n);
    for (uint64_t om = 0; om < (uint64_t(1) << n); ++om) {
      Complex q = degree2_q(xt, om);
      Complex acc(0, 0);
      uint64_t sub = om;
      while (true) {
        acc += degree2_p(xt, sub);
        if (sub == 0) break;
        sub = (sub - 1) & om;
      }
      worstm = std::max(worstm, std::abs(q - acc));
    }
    s.add("eval.moebius_q_from_p", worstm <= 1e-10, "max dev " + format_double(worstm));
  }

  // degree-3 partial-trace reduction: per-gamma ratio constants
  if (r == 3) {
    bool ratio_ok = true;
    std::ostringstream rs;
    for (size_t bi = 0; bi < basis.size(); ++bi) {
      std::vector<Complex> ratios;
      bool lu_zero = true;
      for (int t = 0; t < std::max(8, trials); ++t) {
        Matrix rho = random_complex_matrix(1 << n, rng);
        Complex ev = eval_gamma(x_transform(rho, n), gammas[bi]);
        Complex lu = degree3_lu_form(rho, gammas[bi]);
        if (std::abs(lu) > 1e-9) lu_zero = false;
        if (std::abs(ev) > 1e-12) ratios.push_back(lu / ev);
      }
      if (lu_zero) {
        rs << "  ratio[" << basis[bi].digits() << "] = 0\n";
        continue;
      }
      Complex mean(0, 0);
      for (auto z : ratios) mean += z;
      mean /= double(ratios.size());
      double sd = 0;
      for (auto z : ratios) sd += std::norm(z - mean);
      sd = std::sqrt(sd / double(ratios.size()));
      double rel = sd / std::max(std::abs(mean), 1e-300);
      rs << "  ratio[" << basis[bi].digits() << "] = " << format_double(mean.real());
      if (rel > 1e-8) {
        rs << " UNSTABLE (rel sd " << format_double(rel) << ")";
        ratio_ok = false;
      }
      rs << "\n";
    }
    s.add("eval.degree3_ratio_constant", ratio_ok, "per-gamma constants:\n" + rs.str());
  }
}

void check_fingerprint(Suite &s, int n, int trials, std::mt19937_64 &rng) {
  // projector algebra on a sample code
  StabilizerCode code;
  code.n = 2;
  code.rows = {PauliIndex::parse("00|11"), PauliIndex::parse("11|00")};
  code.signs = {+1, +1};
  Matrix p = projector(code);
  double idem = (p * p - p).cwiseAbs().maxCoeff();
  double herm = (p - p.adjoint()).cwiseAbs().maxCoeff();
  s.add("fingerprint.projector_algebra", idem <= 1e-12 && herm <= 1e-12,
        "idempotency " + format_double(idem) + ", hermiticity " + format_double(herm));

  // homogeneity under scaling
  Matrix rho = random_complex_matrix(1 << n, rng);
  Complex sc(0.7, -0.4);
  Fingerprint f1 = fingerprint(rho, 3);
  Fingerprint f2 = fingerprint(sc * rho, 3);
  double worsth = 0;
  Complex sp = 1;
  for (int r = 1; r <= 3; ++r) {
    sp *= sc;
    for (size_t i = 0; i < f1.entries[size_t(r - 1)].size(); ++i)
      worsth = std::max(worsth, std::abs(f2.entries[size_t(r - 1)][i] -
                                         sp * f1.entries[size_t(r - 1)][i]));
  }
  s.add("fingerprint.homogeneity", worsth <= 1e-8, "max dev " + format_double(worsth));

  // soundness: conjugated pairs should never be reported distinct
  int distinct = 0;
  for (int t = 0; t < trials; ++t) {
    Matrix r0 = random_complex_matrix(1 << n, rng);
    Matrix u = dense_unitary(random_local_clifford(n, rng));
    CompareResult res =
        compare(fingerprint(r0, 3), fingerprint(u * r0 * u.adjoint(), 3), 1e-9);
    if (res.verdict == Verdict::distinct) ++distinct;
  }
  s.add("fingerprint.conjugation_soundness", distinct == 0,
        std::to_string(distinct) + "/" + std::to_string(trials) +
            " conjugated pairs reported distinct (degree-3 all-odd entries flip sign)");
}

}  // namespace

bool VerifyReport::all_pass() const {
  for (const auto &r : results)
    if (!r.pass) return false;
  return true;
}

VerifyReport verify_suite(int n, int r, int trials, uint64_t seed) {
  Suite s;
  std::mt19937_64 rng(seed);
  check_gf2(s, r, rng);
  check_clifford(s);
  check_orbits(s, r);
  check_normal_form(s, n, r, trials, rng);
  if (r <= 4) check_averaging(s, r);
  check_eval(s, n, r, trials, rng);
  check_fingerprint(s, n, std::min(trials, 50), rng);
  return VerifyReport{std::move(s.results)};
}

void print_report(std::ostream &out, const VerifyReport &report) {
  for (const auto &r : report.results)
    out << (r.pass ? "PASS " : "FAIL ") << r.name << "  " << r.detail << "\n";
  int fails = 0;
  for (const auto &r : report.results)
    if (!r.pass) ++fails;
  out << (fails == 0 ? "ALL PROPERTIES PASS" : std::to_string(fails) + " PROPERTIES FAILED")
      << " (" << report.results.size() << " checked)\n";
}

}  // namespace lcinv
