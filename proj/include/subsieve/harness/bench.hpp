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

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "subsieve/harness/gen.hpp"
#include "subsieve/harness/run.hpp"

namespace subsieve::harness {

// A sweep is the cross product of every list below, in the order
// algorithm > seed > k/d > b > eps > solver. An empty list yields no rows.
struct BenchSpec {
  std::vector<Algorithm> algorithms{Algorithm::kCardOnePass};
  std::string oracle_kind = "cut";  // cut | family | table
  std::size_t n = 12;
  std::vector<std::uint64_t> seeds{0};
  std::vector<std::size_t> ks{4};
  std::vector<std::size_t> ds{1};
  std::vector<std::int64_t> bs{4};
  std::vector<double> epsilons{0.1};
  std::vector<SolverKind> solvers{SolverKind::kExact};
  GridMode grid = GridMode::kSafe;
  bool shuffle = false;
  bool verify_exact = true;
  std::uint64_t rdg_seeds = 0;  // > 0 adds randomized-solver baseline columns
  gen::GraphParams graph;
  gen::FamilyParams family;
  std::int64_t max_denominator = 4;
};

inline constexpr const char* kBenchHeader =
    "alg,oracle,n,seed,k,d,b,eps,solver,value,opt,ratio,bound,pass,"
    "oracle_queries_total,oracle_queries_per_element_max,peak_resident_elements,"
    "live_instances_max,elements_seen,early_termination,wall_time_ms";

inline std::unique_ptr<SetFunction> BenchOracle(const BenchSpec& s, std::uint64_t seed) {
  if (s.oracle_kind == "cut") {
    return std::make_unique<CutOracle>(gen::RandomCutGraph(s.n, seed, s.graph));
  }
  if (s.oracle_kind == "family" || s.oracle_kind == "coverage") {
    return std::make_unique<CoverageOracle>(gen::RandomFamily(s.n, seed, s.family));
  }
  if (s.oracle_kind == "table") {
    return std::make_unique<TableOracle>(gen::RandomSubmodularTable(s.n, seed));
  }
  throw ParameterError("unknown oracle kind '" + s.oracle_kind + "'");
}

namespace detail {

inline std::string Cell(const Json& j) {
  if (j.is_null()) return "";
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_number_float()) return io::detail::Num(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

}  // namespace detail

// Emits the CSV header and one row per run. Instances are generated in
// memory with the same generators as `gen`, so a row matches `run` on the
// files `gen` writes for the same seed.
inline void Bench(const BenchSpec& s, std::ostream& out) {
  out << kBenchHeader;
  if (s.rdg_seeds > 0) out << ",rdg_value_mean,rdg_ratio_mean";
  out << '\n';
  for (Algorithm alg : s.algorithms) {
    const bool knapsack = IsKnapsack(alg);
    for (std::uint64_t seed : s.seeds) {
      Problem p;
      p.f = BenchOracle(s, seed);
      p.n = s.n;
      const std::vector<std::size_t> sizes = knapsack ? s.ds : s.ks;
      const std::vector<std::int64_t> caps = knapsack ? s.bs : std::vector<std::int64_t>{0};
      for (std::size_t size : sizes) {
        for (std::int64_t b : caps) {
          if (knapsack) {
            auto costs = gen::RandomCosts(s.n, seed, {size, b, s.max_denominator});
            p.standardized = Standardize(costs, std::vector<Rational>(size, Rational(b)));
          }
          for (double eps : s.epsilons) {
            for (SolverKind solver : s.solvers) {
              RunConfig c;
              c.algorithm = alg;
              c.oracle = s.oracle_kind + ":<generated>";
              if (!knapsack) c.k = size;
              c.epsilon = eps;
              c.solver = solver;
              c.shuffle = s.shuffle;
              c.seed = seed;
              c.grid = s.grid;
              c.verify_exact = s.verify_exact;
              if (alg == Algorithm::kCardOpt || alg == Algorithm::kDkOpt) c.v = "opt";
              if (alg == Algorithm::kCardMax || alg == Algorithm::kDkDensity) c.m = "auto";
              const Json r = Execute(c, p);
              const Json& st = r["instrumentation"];
              const Json& ex = r["exact"];
              out << AlgorithmName(alg) << ',' << s.oracle_kind << ',' << s.n << ','
                  << seed << ',' << (knapsack ? "" : std::to_string(size)) << ','
                  << (knapsack ? std::to_string(size) : "") << ','
                  << (knapsack ? std::to_string(b) : "") << ',' << io::detail::Num(eps)
                  << ',' << SolverName(solver) << ','
                  << detail::Cell(r["output"]["value"]) << ','
                  << (ex.is_null() ? "" : detail::Cell(ex["opt_value"])) << ','
                  << (ex.is_null() ? "" : detail::Cell(ex["ratio"])) << ','
                  << detail::Cell(r["guarantee_bound"]) << ',' << detail::Cell(r["pass"])
                  << ',' << st["oracle_queries_total"] << ','
                  << st["oracle_queries_per_element_max"] << ','
                  << st["peak_resident_elements"] << ',' << st["live_instances_max"] << ','
                  << st["elements_seen"] << ',' << detail::Cell(st["early_termination"])
                  << ',' << detail::Cell(r["wall_time_ms"]);
              if (s.rdg_seeds > 0) {
                double total = 0.0;
                RunConfig rc = c;
                rc.solver = SolverKind::kRandomDoubleGreedy;
                rc.verify_exact = false;
                if (rc.v) rc.v = io::detail::Num(r["trusted_input"]["v"].get<double>());
                for (std::uint64_t i = 0; i < s.rdg_seeds; ++i) {
                  rc.solver_seed = i;
                  total += Execute(rc, p)["output"]["value"].get<double>();
                }
                const double mean = total / static_cast<double>(s.rdg_seeds);
                out << ',' << io::detail::Num(mean) << ',';
                if (!ex.is_null() && ex["opt_value"].get<double>() > 0.0) {
                  out << io::detail::Num(mean / ex["opt_value"].get<double>());
                }
              }
              out << '\n';
            }
          }
        }
      }
    }
  }
}

}  // namespace subsieve::harness
