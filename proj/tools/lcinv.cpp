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

// Command-line front end: orbit listing, dimension tables, normal-form
// canonicalization, invariant evaluation, fingerprinting and the
// self-verification suite.

#include <iostream>

#include <CLI11.hpp>

#include "lcinv/cli.hpp"

int main(int argc, char **argv) {
  lcinv::RunConfig cfg;
  CLI::App app{"invariants of the local Clifford group"};
  app.require_subcommand(1);
  app.add_option("--threads", cfg.threads, "worker count (0 = runtime default)");

  auto *orbits = app.add_subcommand("orbits", "count or list the orbits at degree r");
  orbits->add_option("--r", cfg.r, "degree")->required();
  orbits->add_flag("--list", cfg.list, "print one descriptor per line");

  auto *dims = app.add_subcommand("dims", "invariant-space dimension counts");
  dims->add_option("--n", cfg.n, "qubits")->required();
  dims->add_option("--r", cfg.r, "degree")->required();
  dims->add_option("--method", cfg.method, "enumeration | burnside | both");
  dims->add_flag("--bounds", cfg.bounds, "print the exact lower/upper bounds");

  auto *nf = app.add_subcommand("normal-forms", "list all normal forms");
  nf->add_option("--n", cfg.n, "qubits")->required();
  nf->add_option("--r", cfg.r, "degree")->required();

  auto *canon = app.add_subcommand("canon", "canonicalize an orbit matrix");
  canon->add_option("--matrix", cfg.matrix_path, "file: 'n r' then n digit rows")->required();

  auto *ev = app.add_subcommand("eval", "evaluate basis invariants on a matrix");
  ev->add_option("--input", cfg.input_path, "matrix file")->required();
  ev->add_option("--r", cfg.r, "degree");
  ev->add_flag("--all", cfg.eval_all, "evaluate the whole degree-r basis (default)");
  ev->add_option("--gamma", cfg.gamma, "single orbit matrix, rows joined by '/'");

  auto *fp = app.add_subcommand("fingerprint", "invariant fingerprint of a state or code");
  fp->add_option("--stabilizer", cfg.stabilizer_path, "stabilizer file: 'n k' then signed rows");
  fp->add_option("--input", cfg.input_path, "matrix file");
  fp->add_option("--max-degree", cfg.max_degree, "highest invariant degree (default 3)");
  fp->add_option("--compare", cfg.compare_path, "second input of the same kind");
  fp->add_option("--tol", cfg.tol, "comparison tolerance (default 1e-9)");

  auto *check = app.add_subcommand("check", "run the self-verification suite");
  check->add_option("--n", cfg.n, "qubits")->required();
  check->add_option("--r", cfg.r, "degree")->required();
  check->add_option("--trials", cfg.trials, "randomized trials per property");
  check->add_option("--seed", cfg.seed, "seed for all randomized behavior");

  app.add_subcommand("action-table", "print the 24-element conjugation table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return lcinv::run(cfg, std::cout, std::cerr);
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
