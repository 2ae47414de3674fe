// Copyright 2026 The subsieve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subsieve/harness/bench.hpp"
#include "subsieve/harness/gen.hpp"
#include "subsieve/harness/run.hpp"
#include "subsieve/harness/verify.hpp"

namespace {

using namespace subsieve;
using namespace subsieve::harness;

// Splits "a,b,c" on commas; an empty string is an empty list.
std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T, typename Parse>
std::vector<T> ParseList(const std::string& text, Parse parse) {
  std::vector<T> out;
  for (const auto& s : SplitList(text)) out.push_back(parse(s));
  return out;
}

std::uint64_t ToU64(const std::string& s) {
  std::size_t used = 0;
  unsigned long long x = 0;
  try {
    x = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.front() == '-') {
    throw ParameterError("expected a non-negative integer, got '" + s + "'");
  }
  return x;
}

double ToNumber(const std::string& s) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw ParameterError("expected a number, got '" + s + "'");
  return x;
}

// Writes to `path`, or stdout when it is empty or "-".
void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subsieve: streaming non-monotone submodular maximization"};
  app.require_subcommand(1);

  // run
  RunConfig rc;
  std::string alg = "card-1pass", solver = "exact", order = "file", grid = "safe";
  std::string report_path;
  std::size_t k = 0;
  std::string costs, caps, v, m;
  double gamma = 0.0;
  std::uint64_t solver_seed = 0;
  auto* run = app.add_subcommand("run", "Run one algorithm on one instance");
  run->add_option("--alg", alg, "card-opt|card-max|card-1pass|dk-opt|dk-density|dk-1pass");
  run->add_option("--oracle", rc.oracle, "kind:path, kind in cut|coverage|table")->required();
  auto* k_opt = run->add_option("--k", k, "Cardinality bound");
  auto* costs_opt = run->add_option("--costs", costs, "Cost matrix file");
  auto* caps_opt = run->add_option("--caps", caps, "Capacities, e.g. 10,5");
  run->add_option("--eps", rc.epsilon, "Grid resolution in (0, 1]");
  auto* v_opt = run->add_option("--v", v, "Guess of OPT, or 'opt'");
  auto* m_opt = run->add_option("--m", m, "Max singleton value or density, or 'auto'");
  run->add_option("--solver", solver, "exact|dg|rdg");
  run->add_option("--order", order, "file|shuffle");
  run->add_option("--seed", rc.seed, "Shuffle seed (and solver seed by default)");
  auto* sseed_opt = run->add_option("--solver-seed", solver_seed,
                                    "Seed for the randomized solver");
  run->add_option("--grid", grid, "safe|tight (alias: paper)");
  auto* gamma_opt = run->add_option("--gamma", gamma, "Use thresholds tuned for this ratio");
  run->add_option("--report", report_path, "Write the report here instead of stdout");
  run->add_flag("--verify-exact", rc.verify_exact, "Compare against brute-force OPT");

  // gen
  GenSpec gs;
  std::string gen_out;
  double wmin = 1.0, wmax = 10.0;
  auto* gen = app.add_subcommand("gen", "Generate a seeded instance file");
  gen->add_option("kind", gs.kind, "cut|family|table|costs")->required();
  gen->add_option("--n", gs.n, "Number of elements");
  gen->add_option("--seed", gs.seed);
  gen->add_option("--p", gs.graph.edge_probability, "Edge probability (cut)");
  gen->add_option("--wmin", wmin, "Minimum edge weight (cut)");
  gen->add_option("--wmax", wmax, "Maximum edge weight (cut)");
  gen->add_flag("--directed", gs.graph.directed, "Directed cut graph");
  gen->add_option("--universe", gs.family.universe, "Universe size (family)");
  gen->add_option("--cover-p", gs.family.cover_probability, "Cover probability (family)");
  gen->add_option("--d", gs.costs.dims, "Dimensions (costs)");
  gen->add_option("--b", gs.costs.capacity, "Capacity; entries land in [1, b] (costs)");
  gen->add_option("--den", gs.costs.max_denominator, "Largest denominator (costs)");
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  // verify
  std::string suite = "all", verify_report;
  BatteryOptions bo;
  auto* verify = app.add_subcommand("verify", "Run the seeded property battery");
  verify->add_option("--suite", suite,
                     "cardinality|knapsack|standardize|unconstrained|memory|all");
  verify->add_option("--seeds", bo.seeds, "Number of seeds (0: empty battery)");
  verify->add_option("--seed-start", bo.seed_start);
  verify->add_option("--n-max", bo.n_max, "Largest instance size (3..12)");
  verify->add_option("--eps", bo.epsilon);
  verify->add_option("--orders", bo.orders, "Stream orders per instance");
  verify->add_option("--rdg-seeds", bo.rdg_seeds, "Randomized double greedy repetitions");
  verify->add_option("--report", verify_report);

  // bench
  BenchSpec bs;
  std::string b_algs = "card-1pass", b_seeds = "0", b_k = "4", b_d = "1", b_b = "4",
              b_eps = "0.1", b_solvers = "exact", b_order = "file", b_grid = "safe",
              b_out;
  bool b_no_exact = false;
  auto* bench = app.add_subcommand("bench", "Parameter sweep to CSV");
  bench->add_option("--alg", b_algs, "Comma list of algorithms");
  bench->add_option("--oracle-kind", bs.oracle_kind, "cut|family|table");
  bench->add_option("--n", bs.n);
  bench->add_option("--seeds", b_seeds, "Comma list of instance seeds");
  bench->add_option("--k", b_k, "Comma list");
  bench->add_option("--d", b_d, "Comma list");
  bench->add_option("--b", b_b, "Comma list");
  bench->add_option("--eps", b_eps, "Comma list");
  bench->add_option("--solver", b_solvers, "Comma list of exact|dg|rdg");
  bench->add_option("--order", b_order, "file|shuffle");
  bench->add_option("--grid", b_grid, "safe|tight (alias: paper)");
  bench->add_option("--p", bs.graph.edge_probability, "Edge probability (cut)");
  bench->add_option("--den", bs.max_denominator, "Largest cost denominator");
  bench->add_option("--rdg-baseline", bs.rdg_seeds,
                    "Add columns averaging this many randomized-solver runs");
  bench->add_flag("--no-exact", b_no_exact, "Skip brute-force OPT");
  bench->add_option("--out", b_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*run) {
      rc.algorithm = ParseAlgorithm(alg);
      if (*k_opt) rc.k = k;
      if (*costs_opt) rc.costs = costs;
      if (*caps_opt) rc.caps = caps;
      if (*v_opt) rc.v = v;
      if (*m_opt) rc.m = m;
      if (*sseed_opt) rc.solver_seed = solver_seed;
      rc.solver = ParseSolverKind(solver);
      if (order != "file" && order != "shuffle") {
        throw ParameterError("--order must be file or shuffle");
      }
      rc.shuffle = order == "shuffle";
      rc.grid = ParseGridMode(grid);
      if (*gamma_opt) rc.gamma = gamma;
      const Json report = Run(rc);
      Emit(report_path, report.dump(2) + "\n");
      return 0;
    }
    if (*gen) {
      gs.graph.weight_min_milli = static_cast<std::int64_t>(std::llround(wmin * 1000.0));
      gs.graph.weight_max_milli = static_cast<std::int64_t>(std::llround(wmax * 1000.0));
      std::ostringstream text;
      Generate(gs, text);
      Emit(gen_out, text.str());
      return 0;
    }
    if (*verify) {
      if (bo.n_max < 3 || bo.n_max > 12) throw ParameterError("--n-max must lie in 3..12");
      CheckEpsilon(bo.epsilon);
      Battery battery;
      RunSuite(battery, suite, bo);
      Json summary = battery.Summary();
      Emit(verify_report, summary.dump(2) + "\n");
      return battery.ok() ? 0 : 1;
    }
    if (*bench) {
      bs.algorithms = ParseList<Algorithm>(b_algs, [](const std::string& s) {
        return ParseAlgorithm(s);
      });
      bs.seeds = ParseList<std::uint64_t>(b_seeds, ToU64);
      bs.ks = ParseList<std::size_t>(b_k, ToU64);
      bs.ds = ParseList<std::size_t>(b_d, ToU64);
      bs.bs = ParseList<std::int64_t>(b_b, [](const std::string& s) {
        return static_cast<std::int64_t>(ToU64(s));
      });
      bs.epsilons = ParseList<double>(b_eps, ToNumber);
      bs.solvers = ParseList<SolverKind>(b_solvers, [](const std::string& s) {
        return ParseSolverKind(s);
      });
      if (b_order != "file" && b_order != "shuffle") {
        throw ParameterError("--order must be file or shuffle");
      }
      bs.shuffle = b_order == "shuffle";
      bs.grid = ParseGridMode(b_grid);
      bs.verify_exact = !b_no_exact;
      std::ostringstream csv;
      Bench(bs, csv);
      Emit(b_out, csv.str());
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
