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

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "subsieve/cardinality_sieve.hpp"
#include "subsieve/exact.hpp"
#include "subsieve/knapsack_sieve.hpp"
#include "subsieve/oracles/generators.hpp"
#include "subsieve/oracles/io.hpp"

namespace subsieve::harness {

using Json = nlohmann::ordered_json;

enum class Algorithm { kCardOpt, kCardMax, kCardOnePass, kDkOpt, kDkDensity, kDkOnePass };

inline constexpr std::string_view kAlgorithmNames[] = {
    "card-opt", "card-max", "card-1pass", "dk-opt", "dk-density", "dk-1pass"};

inline std::string_view AlgorithmName(Algorithm a) {
  return kAlgorithmNames[static_cast<int>(a)];
}

inline Algorithm ParseAlgorithm(std::string_view name) {
  for (int i = 0; i < 6; ++i) {
    if (kAlgorithmNames[i] == name) return static_cast<Algorithm>(i);
  }
  throw ParameterError("unknown algorithm '" + std::string(name) + "'");
}

inline bool IsKnapsack(Algorithm a) { return a >= Algorithm::kDkOpt; }

struct RunConfig {
  Algorithm algorithm = Algorithm::kCardOnePass;
  std::string oracle;                // kind:path, kind in cut|coverage|table
  std::optional<std::size_t> k;
  std::optional<std::string> costs;  // path
  std::optional<std::string> caps;   // comma-separated rationals
  double epsilon = 0.1;
  std::optional<std::string> v;      // number or "opt"
  std::optional<std::string> m;      // number or "auto"
  SolverKind solver = SolverKind::kExact;
  bool shuffle = false;
  std::uint64_t seed = 0;                   // shuffle seed
  std::optional<std::uint64_t> solver_seed;  // randomized solver; defaults to seed
  GridMode grid = GridMode::kSafe;
  std::optional<double> gamma;       // set: generalized thresholds
  bool verify_exact = false;
};

inline Json ConfigJson(const RunConfig& c) {
  auto opt = [](const auto& x) { return x ? Json(*x) : Json(nullptr); };
  Json j;
  j["algorithm"] = AlgorithmName(c.algorithm);
  j["oracle"] = c.oracle;
  j["k"] = opt(c.k);
  j["costs"] = opt(c.costs);
  j["caps"] = opt(c.caps);
  j["epsilon"] = c.epsilon;
  j["v"] = opt(c.v);
  j["m"] = opt(c.m);
  j["solver"] = SolverName(c.solver);
  j["order"] = c.shuffle ? "shuffle" : "file";
  j["seed"] = c.seed;
  j["solver_seed"] = opt(c.solver_seed);
  j["grid"] = c.grid == GridMode::kSafe ? "safe" : "tight";
  j["threshold"] = c.gamma ? "generalized" : "classic";
  j["gamma"] = opt(c.gamma);
  j["verify_exact"] = c.verify_exact;
  return j;
}

// A loaded problem: the set function plus, for knapsack runs, the
// standardized costs and the original constraint.
struct Problem {
  std::unique_ptr<SetFunction> f;
  std::optional<StandardizedInstance> standardized;
  std::size_t n = 0;
};

inline std::unique_ptr<SetFunction> LoadOracle(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ParameterError("oracle must be kind:path, got '" + std::string(spec) + "'");
  }
  const std::string kind(spec.substr(0, colon));
  const std::string path(spec.substr(colon + 1));
  if (kind == "cut") return std::make_unique<CutOracle>(io::LoadGraph(path));
  if (kind == "coverage") return std::make_unique<CoverageOracle>(io::LoadFamily(path));
  if (kind == "table") return std::make_unique<TableOracle>(io::LoadTable(path));
  throw ParameterError("unknown oracle kind '" + kind + "' (cut|coverage|table)");
}

inline Problem LoadProblem(const RunConfig& c) {
  Problem p;
  p.f = LoadOracle(c.oracle);
  p.n = p.f->GroundSize();
  if (IsKnapsack(c.algorithm)) {
    if (!c.costs || !c.caps) throw ParameterError("knapsack runs need --costs and --caps");
    CostMatrix costs = io::LoadCosts(*c.costs);
    if (costs.elements() != p.n) {
      throw InputError("cost matrix has " + std::to_string(costs.elements()) +
                       " columns but the oracle has " + std::to_string(p.n) + " elements");
    }
    p.standardized = Standardize(costs, io::ParseCapacities(*c.caps));
  }
  return p;
}

inline double ParsePositive(const std::string& text, const char* what) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(x > 0.0) || !std::isfinite(x)) {
    throw ParameterError(std::string(what) + " must be a positive number, got '" + text + "'");
  }
  return x;
}

inline Json StatsJson(const Instrumentation& s) {
  Json j;
  j["oracle_queries_total"] = s.oracle_queries_total;
  j["oracle_queries_per_element_max"] = s.oracle_queries_per_element_max;
  j["init_queries"] = s.init_queries;
  j["element_queries"] = s.element_queries;
  j["post_pass_queries"] = s.post_pass_queries;
  j["peak_resident_elements"] = s.peak_resident_elements;
  j["live_instances_max"] = s.live_instances_max;
  j["query_bound_violations"] = s.query_bound_violations;
  j["passes"] = s.passes;
  j["elements_seen"] = s.elements_seen;
  j["early_termination"] = s.early_terminated;
  return j;
}

// Executes one configured run on an already loaded problem and returns the
// report. The report is a pure function of (config, problem) except for
// wall_time_ms, which is always the last field.
inline Json Execute(const RunConfig& c, const Problem& p) {
  const auto start = std::chrono::steady_clock::now();
  CheckEpsilon(c.epsilon);
  if (c.gamma && !(*c.gamma > 0.0 && *c.gamma <= 1.0)) {
    throw ParameterError("gamma must lie in (0, 1]");
  }
  SieveOptions options;
  options.solver = {c.solver, c.solver_seed.value_or(c.seed)};
  options.grid = c.grid;
  if (c.gamma) options.threshold = {ThresholdMode::kGeneralized, *c.gamma};

  const SetFunction& f = *p.f;
  const std::size_t n = p.n;
  const bool knapsack = IsKnapsack(c.algorithm);
  if (!knapsack && !c.k) throw ParameterError("cardinality runs need --k");
  const std::size_t k = c.k.value_or(0);
  const Constraint constraint =
      knapsack ? p.standardized->AsConstraint() : Constraint{Cardinality{k}};
  const std::size_t d = knapsack ? p.standardized->dims() : 0;
  const double b = knapsack ? p.standardized->capacity_value() : 0.0;

  const bool needs_v = c.algorithm == Algorithm::kCardOpt || c.algorithm == Algorithm::kDkOpt;
  const bool needs_m =
      c.algorithm == Algorithm::kCardMax || c.algorithm == Algorithm::kDkDensity;
  if (needs_v && !c.v) throw ParameterError("this algorithm needs --v");
  if (needs_m && !c.m) throw ParameterError("this algorithm needs --m");

  std::optional<ExactResult> exact;
  if (c.verify_exact || (c.v && *c.v == "opt")) {
    Oracle exact_oracle(f);
    exact = ExactOpt(exact_oracle, constraint, n);
  }

  double v = 0.0;
  if (needs_v) v = *c.v == "opt" ? exact->opt_value : ParsePositive(*c.v, "--v");
  double m = 0.0;
  if (needs_m) {
    if (*c.m == "auto") {
      Oracle side(f);
      if (knapsack) {
        m = DensityMax(side, *p.standardized, Iota(n));
      } else {
        for (ElementId u = 0; u < n; ++u) m = std::max(m, side.Singleton(u));
      }
    } else {
      m = ParsePositive(*c.m, "--m");
    }
  }
  if (needs_v && !(v > 0.0)) throw ParameterError("guess v must be positive (OPT is 0)");

  const auto stream = gen::StreamOrder(n, c.shuffle, c.seed);
  Oracle oracle(f);
  RunResult run;
  std::size_t memory_cap = 0;
  double factor = 0.0;
  switch (c.algorithm) {
    case Algorithm::kCardOpt:
      run = SieveCardKnownOpt(oracle, stream, k, v, options);
      memory_cap = 3 * k;
      break;
    case Algorithm::kCardMax:
      run = SieveCardKnownMax(oracle, stream, k, m, c.epsilon, options);
      memory_cap = CardinalityMemoryCap(k, c.epsilon);
      break;
    case Algorithm::kCardOnePass:
      run = SieveCardOnePass(oracle, stream, k, c.epsilon, options);
      memory_cap = CardinalityMemoryCap(k, c.epsilon);
      break;
    case Algorithm::kDkOpt:
      run = SieveDkKnownOpt(oracle, stream, *p.standardized, v, options);
      memory_cap = 3 * static_cast<std::size_t>(std::floor(b)) + 1;
      break;
    case Algorithm::kDkDensity:
      run = SieveDkKnownDensity(oracle, stream, *p.standardized, m, c.epsilon, options);
      memory_cap = KnapsackMemoryCap(b, d, c.epsilon);
      break;
    case Algorithm::kDkOnePass:
      run = SieveDkOnePass(oracle, stream, *p.standardized, c.epsilon, options);
      memory_cap = KnapsackMemoryCap(b, d, c.epsilon);
      break;
  }
  const double gamma = options.solver.gamma();
  factor = knapsack
               ? KnapsackGuarantee(options.threshold.KnapsackFactor(d), gamma, d)
               : CardinalityGuarantee(options.threshold.CardinalityFactor(), gamma);

  // Ratio bound against OPT. Grid variants lose eps; known-OPT variants get
  // factor * v / OPT when v <= OPT and nothing otherwise.
  std::optional<double> bound;
  std::string ratio_skip;
  if (exact) {
    if (needs_v) {
      const double opt = exact->opt_value;
      bound = opt > 0.0 && v <= opt * (1.0 + 1e-12) ? factor * std::min(1.0, v / opt) : 0.0;
    } else {
      bound = std::max(0.0, factor - c.epsilon);
      if (needs_m) {
        Oracle side(f);
        double true_m = 0.0;
        if (knapsack) {
          true_m = DensityMax(side, *p.standardized, Iota(n));
        } else {
          for (ElementId u = 0; u < n; ++u) true_m = std::max(true_m, side.Singleton(u));
        }
        if (std::abs(true_m - m) > 1e-12 * std::max(1.0, true_m)) {
          bound = 0.0;
          ratio_skip = "m differs from the true maximum; no guarantee applies";
        }
      }
    }
    if (c.solver == SolverKind::kRandomDoubleGreedy) {
      ratio_skip = "randomized solver: the bound holds in expectation only";
    }
  }

  const auto& s = run.stats;
  const bool feasible = IsFeasible(constraint, run.solution.ids);
  const bool memory_ok = s.peak_resident_elements <= memory_cap;
  const bool queries_ok = s.query_bound_violations == 0;
  const bool single_pass =
      s.passes == 1 && (s.early_terminated ? s.elements_seen <= n : s.elements_seen == n);

  Json report;
  report["config"] = ConfigJson(c);
  report["n"] = n;
  if (knapsack) {
    Json st;
    st["dims"] = d;
    st["b"] = ToString(p.standardized->capacity);
    st["b_prime"] = ToString(p.standardized->b_prime);
    st["c_prime"] = ToString(p.standardized->c_prime);
    report["standardized"] = st;
  }
  Json trusted;
  trusted["v"] = needs_v ? Json(v) : Json(nullptr);
  trusted["m"] = needs_m ? Json(m) : Json(nullptr);
  report["trusted_input"] = trusted;
  report["output"] = {{"ids", run.solution.ids}, {"value", run.solution.value}};
  report["early_termination"] = s.early_terminated;
  report["instrumentation"] = StatsJson(s);
  report["memory_cap"] = memory_cap;
  if (exact) {
    Json e;
    e["opt_ids"] = exact->opt_set;
    e["opt_value"] = exact->opt_value;
    e["feasible_count"] = exact->feasible_count;
    e["ratio"] = exact->opt_value > 0.0 ? Json(run.solution.value / exact->opt_value)
                                        : Json(nullptr);
    report["exact"] = e;
  } else {
    report["exact"] = nullptr;
  }
  report["guarantee_factor"] = factor;
  report["guarantee_bound"] = bound ? Json(*bound) : Json(nullptr);

  Json checks;
  checks["feasible"] = feasible;
  std::optional<bool> ratio_ok;
  if (bound && ratio_skip.empty()) ratio_ok = VerifyRatio(run.solution.value, *exact, *bound).pass;
  checks["ratio"] = ratio_ok ? Json(*ratio_ok) : Json(nullptr);
  checks["memory"] = memory_ok;
  checks["queries"] = queries_ok;
  checks["single_pass"] = single_pass;
  report["checks"] = checks;
  Json skipped = Json::object();
  if (!exact) skipped["ratio"] = "exact verification not requested";
  else if (!ratio_skip.empty()) skipped["ratio"] = ratio_skip;
  report["skipped"] = skipped;
  report["pass"] = feasible && memory_ok && queries_ok && single_pass && ratio_ok.value_or(true);
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

inline Json Run(const RunConfig& c) { return Execute(c, LoadProblem(c)); }

// The report without its timing field, for reproducibility comparisons.
inline std::string StableDump(Json report) {
  report.erase("wall_time_ms");
  return report.dump(2);
}

}  // namespace subsieve::harness
