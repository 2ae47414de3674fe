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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "subsieve/cardinality_sieve.hpp"
#include "subsieve/exact.hpp"
#include "subsieve/harness/battery.hpp"
#include "subsieve/knapsack_sieve.hpp"
#include "subsieve/oracles/generators.hpp"
#include "subsieve/oracles/table.hpp"
#include "subsieve/unconstrained.hpp"

// Seeded property battery: every run's output is checked against brute-force
// ground truth and the closed-form memory and query caps.

namespace subsieve::harness {

struct BatteryOptions {
  std::uint64_t seed_start = 0;
  std::uint64_t seeds = 200;
  std::size_t n_max = 12;
  double epsilon = 0.1;
  std::size_t orders = 3;          // stream orders per instance (>= 1)
  std::uint64_t rdg_seeds = 1000;  // randomized double greedy repetitions
};

// A random non-negative submodular function for the battery: even seeds give
// an Erdos-Renyi cut graph, odd seeds a validated composite table. f(empty)
// is 0 for both.
struct RandomFunction {
  std::unique_ptr<SetFunction> f;
  std::string label;
  bool valid = true;
};

inline RandomFunction MakeRandomFunction(std::size_t n, std::uint64_t seed) {
  RandomFunction out;
  if (seed % 2 == 0) {
    gen::GraphParams p;
    p.edge_probability = 0.4 + 0.1 * static_cast<double>(seed % 4);
    out.f = std::make_unique<CutOracle>(gen::RandomCutGraph(n, seed, p));
    out.label = "cut";
  } else {
    auto table = gen::RandomSubmodularTable(n, seed);
    out.valid = ValidateSubmodular(table).ok;
    out.f = std::make_unique<TableOracle>(std::move(table));
    out.label = "table";
  }
  return out;
}

inline std::string CaseName(const std::string& label, std::uint64_t seed,
                            std::size_t order) {
  return label + " seed=" + std::to_string(seed) + " order=" + std::to_string(order);
}

inline bool SameRun(const RunResult& a, const RunResult& b) {
  const auto& x = a.stats;
  const auto& y = b.stats;
  return a.solution.ids == b.solution.ids && a.solution.value == b.solution.value &&
         x.oracle_queries_total == y.oracle_queries_total &&
         x.oracle_queries_per_element_max == y.oracle_queries_per_element_max &&
         x.peak_resident_elements == y.peak_resident_elements &&
         x.live_instances_max == y.live_instances_max &&
         x.elements_seen == y.elements_seen && x.passes == y.passes;
}

// Records a ratio check against bound * OPT.
inline void RecordRatio(Battery& battery, const std::string& check, double value,
                        const ExactResult& exact, double bound,
                        const std::string& name) {
  auto verdict = VerifyRatio(value, exact, std::clamp(bound, 0.0, 1.0));
  battery.Record(check, verdict.pass,
                 name + " value=" + std::to_string(value) +
                     " opt=" + std::to_string(exact.opt_value) +
                     " bound=" + std::to_string(bound),
                 verdict.margin);
}

inline void RecordStats(Battery& battery, const std::string& prefix,
                        const Instrumentation& s, std::size_t n,
                        std::size_t memory_cap, const std::string& name) {
  battery.Record(prefix + ".memory", s.peak_resident_elements <= memory_cap,
                 name + " peak=" + std::to_string(s.peak_resident_elements) +
                     " cap=" + std::to_string(memory_cap));
  battery.Record(prefix + ".queries", s.query_bound_violations == 0,
                 name + " violations=" + std::to_string(s.query_bound_violations));
  const bool single =
      s.passes == 1 && (s.early_terminated ? s.elements_seen <= n : s.elements_seen == n);
  battery.Record(prefix + ".single_pass", single,
                 name + " seen=" + std::to_string(s.elements_seen));
  battery.Record(prefix + ".accounting",
                 s.oracle_queries_total ==
                     s.init_queries + s.element_queries + s.post_pass_queries,
                 name);
}

// True when some live guess v satisfies OPT/(1+eps) <= v <= OPT.
template <typename Instance>
bool GridBracketsOpt(const GuessGrid<Instance>& grid, double opt) {
  for (const auto& [i, inst] : grid.live()) {
    const double v = grid.Value(i);
    if (v * (1.0 + kGuard) >= opt / grid.base() && v <= opt * (1.0 + kGuard)) return true;
  }
  return false;
}

// Every surviving guess of the one-pass cardinality sieve holds the same
// candidates as a fresh known-OPT run with that guess.
inline bool CardinalityLateInstantiationHolds(const GridCardinalitySieve& sieve,
                                              const SetFunction& f,
                                              std::span<const ElementId> stream,
                                              std::size_t k, const SieveOptions& options,
                                              std::string* detail) {
  for (const auto& [i, inst] : sieve.grid().live()) {
    Oracle fresh_oracle(f);
    KnownOptCardinalitySieve fresh(fresh_oracle, k, sieve.grid().Value(i), options);
    StreamDrive(stream, fresh, fresh_oracle);
    if (fresh.instance().s1().ids() != inst.s1().ids() ||
        fresh.instance().s2().ids() != inst.s2().ids()) {
      if (detail) *detail = "exponent " + std::to_string(i);
      return false;
    }
  }
  return true;
}

inline bool IsPrefix(const std::vector<ElementId>& prefix,
                     const std::vector<ElementId>& full) {
  return prefix.size() <= full.size() &&
         std::equal(prefix.begin(), prefix.end(), full.begin());
}

// Knapsack analogue, compared up to the known-OPT run's early return: its
// candidates must be prefixes of the guess's, and the guess must then hold a
// big element worth at least tau.
inline bool KnapsackLateInstantiationHolds(const GridKnapsackSieve& sieve,
                                           const SetFunction& f,
                                           std::span<const ElementId> stream,
                                           const StandardizedInstance& inst,
                                           const SieveOptions& options,
                                           std::string* detail) {
  for (const auto& [i, g] : sieve.grid().live()) {
    Oracle fresh_oracle(f);
    KnownOptKnapsackSieve fresh(fresh_oracle, inst, sieve.grid().Value(i), options);
    StreamDrive(stream, fresh, fresh_oracle);
    const auto& a = fresh.instance();
    bool ok;
    if (fresh.early_returned()) {
      ok = IsPrefix(a.s1().ids(), g.s1().ids()) && IsPrefix(a.s2().ids(), g.s2().ids()) &&
           g.big().has_value() && ClearsThreshold(g.big()->value, g.tau());
    } else {
      ok = a.s1().ids() == g.s1().ids() && a.s2().ids() == g.s2().ids() &&
           !g.big().has_value();
    }
    if (!ok) {
      if (detail) *detail = "exponent " + std::to_string(i);
      return false;
    }
  }
  return true;
}

inline std::vector<ElementId> BatteryOrder(std::size_t n, std::uint64_t seed,
                                           std::size_t order) {
  return gen::StreamOrder(n, order > 0, seed * 7919 + order);
}

// Cardinality battery: known-OPT, known-max and one-pass sieves on random
// instances with n <= n_max and k in 1..4.
inline void RunCardinalitySuite(Battery& battery, const BatteryOptions& opt) {
  const SieveOptions sieve_opt;
  const double eps = opt.epsilon;
  const double c = sieve_opt.threshold.CardinalityFactor();
  const double factor = CardinalityGuarantee(c, sieve_opt.solver.gamma());
  for (std::uint64_t s = opt.seed_start; s < opt.seed_start + opt.seeds; ++s) {
    std::mt19937_64 rng(s ^ 0x9e3779b97f4a7c15ULL);
    const std::size_t k = 1 + rng() % 4;
    const std::size_t n_lo = std::min<std::size_t>(opt.n_max, 3);
    const std::size_t n = n_lo + rng() % (opt.n_max - n_lo + 1);
    auto rf = MakeRandomFunction(n, s);
    battery.Record("card.instance_valid", rf.valid, CaseName(rf.label, s, 0));
    if (!rf.valid) continue;
    const SetFunction& f = *rf.f;

    Oracle exact_oracle(f);
    const ExactResult exact = ExactOpt(exact_oracle, Cardinality{k}, n);
    double m = 0.0;
    for (ElementId u = 0; u < n; ++u) m = std::max(m, f.Evaluate(std::span<const ElementId>(&u, 1)));

    for (std::size_t o = 0; o < std::max<std::size_t>(1, opt.orders); ++o) {
      const auto stream = BatteryOrder(n, s, o);
      const std::string name = CaseName(rf.label, s, o) + " n=" + std::to_string(n) +
                               " k=" + std::to_string(k);

      // One-pass.
      Oracle oracle(f);
      auto sieve = GridCardinalitySieve::OnePass(oracle, k, eps, sieve_opt);
      RunResult run = StreamDrive(stream, sieve, oracle);
      battery.Record("card.1pass.runs", true);
      battery.Record("card.1pass.feasible", run.solution.ids.size() <= k, name);
      battery.Record("card.1pass.value_consistent",
                     run.solution.value == f.Evaluate(run.solution.ids), name);
      RecordRatio(battery, "card.1pass.ratio", run.solution.value, exact,
                  factor - eps, name);
      RecordRatio(battery, "card.1pass.ratio_grid", run.solution.value, exact,
                  factor / (1.0 + eps), name);
      RecordStats(battery, "card.1pass", run.stats, n, CardinalityMemoryCap(k, eps), name);
      {
        Oracle again(f);
        RunResult rerun = SieveCardOnePass(again, stream, k, eps, sieve_opt);
        battery.Record("card.1pass.determinism", SameRun(run, rerun), name);
      }
      {
        std::string why;
        battery.Record("card.1pass.late_instantiation",
                       CardinalityLateInstantiationHolds(sieve, f, stream, k, sieve_opt, &why),
                       name + " " + why);
      }

      // Known max singleton value.
      if (m > 0.0) {
        Oracle mo(f);
        GridCardinalitySieve known_max(mo, k, m, eps, sieve_opt);
        RunResult r2 = StreamDrive(stream, known_max, mo);
        battery.Record("card.max.feasible", r2.solution.ids.size() <= k, name);
        RecordRatio(battery, "card.max.ratio", r2.solution.value, exact, factor - eps, name);
        RecordStats(battery, "card.max", r2.stats, n, CardinalityMemoryCap(k, eps), name);
        battery.Record("card.max.grid_brackets_opt",
                       exact.opt_value <= 0.0 || GridBracketsOpt(known_max.grid(), exact.opt_value),
                       name);
      } else {
        battery.Skip("card.max.ratio", "max singleton value is zero");
      }

      // Known OPT (alpha = 1).
      if (exact.opt_value > 0.0) {
        Oracle vo(f);
        RunResult r1 = SieveCardKnownOpt(vo, stream, k, exact.opt_value, sieve_opt);
        battery.Record("card.opt.runs", true);
        battery.Record("card.opt.feasible", r1.solution.ids.size() <= k, name);
        RecordRatio(battery, "card.opt.ratio", r1.solution.value, exact, factor, name);
        RecordStats(battery, "card.opt", r1.stats, n, 3 * k, name);
      } else {
        battery.Skip("card.opt.ratio", "OPT is zero");
      }
    }
  }
}

struct KnapsackCase {
  std::size_t n = 0;
  std::size_t d = 1;
  std::int64_t b = 2;
  StandardizedInstance inst;
};

inline KnapsackCase MakeKnapsackCase(std::uint64_t seed, std::size_t n_max) {
  std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
  KnapsackCase kc;
  kc.d = 1 + rng() % 3;
  kc.b = 2 + static_cast<std::int64_t>(rng() % 5);
  const std::size_t n_lo = std::min<std::size_t>(n_max, 3);
  kc.n = n_lo + rng() % (n_max - n_lo + 1);
  auto costs = gen::RandomCosts(kc.n, seed, {kc.d, kc.b, 4});
  std::vector<Rational> caps(kc.d, Rational(kc.b));
  kc.inst = Standardize(costs, caps);
  return kc;
}

// d-knapsack battery: d in 1..3, b in 2..6, rational costs in [1, b],
// n <= min(n_max, 10).
inline void RunKnapsackSuite(Battery& battery, const BatteryOptions& opt) {
  const SieveOptions sieve_opt;
  const double eps = opt.epsilon;
  const std::size_t n_max = std::min<std::size_t>(opt.n_max, 10);
  for (std::uint64_t s = opt.seed_start; s < opt.seed_start + opt.seeds; ++s) {
    KnapsackCase kc = MakeKnapsackCase(s, n_max);
    const std::size_t n = kc.n;
    const std::size_t d = kc.d;
    const StandardizedInstance& inst = kc.inst;
    const double b = inst.capacity_value();
    auto rf = MakeRandomFunction(n, s);
    battery.Record("dk.instance_valid", rf.valid, CaseName(rf.label, s, 0));
    if (!rf.valid) continue;
    const SetFunction& f = *rf.f;
    const Constraint constraint = inst.AsConstraint();

    Oracle exact_oracle(f);
    const ExactResult exact = ExactOpt(exact_oracle, constraint, n);
    Oracle density_oracle(f);
    const double m = DensityMax(density_oracle, inst, Iota(n));
    const double c = sieve_opt.threshold.KnapsackFactor(d);
    const double factor = KnapsackGuarantee(c, sieve_opt.solver.gamma(), d);

    battery.Record("dk.standardized_range", [&] {
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (inst.costs.at(i, j) < 1 || inst.costs.at(i, j) > inst.capacity) return false;
      return true;
    }());
    const std::string base = CaseName(rf.label, s, 0) + " n=" + std::to_string(n) +
                             " d=" + std::to_string(d) + " b=" + ToString(inst.capacity);
    const double tol = 1e-9 * std::max(1.0, exact.opt_value);
    battery.Record("dk.bracket_bounds",
                   m <= exact.opt_value + tol && exact.opt_value <= b * m + tol,
                   base + " m=" + std::to_string(m) + " opt=" + std::to_string(exact.opt_value));

    for (std::size_t o = 0; o < std::max<std::size_t>(1, opt.orders); ++o) {
      const auto stream = BatteryOrder(n, s, o);
      const std::string name = base + " order=" + std::to_string(o);

      Oracle oracle(f);
      auto sieve = GridKnapsackSieve::OnePass(oracle, inst, eps, sieve_opt);
      RunResult run = StreamDrive(stream, sieve, oracle);
      battery.Record("dk.1pass.runs", true);
      battery.Record("dk.1pass.feasible", IsFeasible(constraint, run.solution.ids), name);
      battery.Record("dk.1pass.value_consistent",
                     run.solution.value == f.Evaluate(run.solution.ids), name);
      RecordRatio(battery, "dk.1pass.ratio", run.solution.value, exact, factor - eps, name);
      RecordRatio(battery, "dk.1pass.ratio_grid", run.solution.value, exact,
                  factor / (1.0 + eps), name);
      if (d == 1) {
        RecordRatio(battery, "dk.1pass.ratio_d1", run.solution.value, exact,
                    1.0 / 8.0 - eps, name);
      }
      RecordStats(battery, "dk.1pass", run.stats, n, KnapsackMemoryCap(b, d, eps), name);
      battery.Record("dk.1pass.grid_brackets_opt",
                     exact.opt_value <= 0.0 || GridBracketsOpt(sieve.grid(), exact.opt_value),
                     name);
      {
        Oracle again(f);
        RunResult rerun = SieveDkOnePass(again, stream, inst, eps, sieve_opt);
        battery.Record("dk.1pass.determinism", SameRun(run, rerun), name);
      }
      {
        std::string why;
        battery.Record("dk.1pass.late_instantiation",
                       KnapsackLateInstantiationHolds(sieve, f, stream, inst, sieve_opt, &why),
                       name + " " + why);
      }

      if (m > 0.0) {
        Oracle mo(f);
        GridKnapsackSieve known(mo, inst, m, eps, sieve_opt);
        RunResult r5 = StreamDrive(stream, known, mo);
        battery.Record("dk.density.feasible", IsFeasible(constraint, r5.solution.ids), name);
        RecordRatio(battery, "dk.density.ratio", r5.solution.value, exact, factor - eps, name);
        RecordStats(battery, "dk.density", r5.stats, n, KnapsackMemoryCap(b, d, eps), name);
        battery.Record("dk.density.grid_brackets_opt",
                       exact.opt_value <= 0.0 || GridBracketsOpt(known.grid(), exact.opt_value),
                       name);
      } else {
        battery.Skip("dk.density.ratio", "max density is zero");
      }

      if (exact.opt_value > 0.0) {
        Oracle vo(f);
        RunResult r4 = SieveDkKnownOpt(vo, stream, inst, exact.opt_value, sieve_opt);
        battery.Record("dk.opt.runs", true);
        battery.Record("dk.opt.feasible", IsFeasible(constraint, r4.solution.ids), name);
        RecordRatio(battery, "dk.opt.ratio", r4.solution.value, exact, factor, name);
        RecordStats(battery, "dk.opt", r4.stats, n,
                    3 * static_cast<std::size_t>(std::floor(b)) + 1, name);
      } else {
        battery.Skip("dk.opt.ratio", "OPT is zero");
      }
    }
  }
}

// Exhaustive feasibility equivalence of standardization on unstandardized
// random instances (n <= min(n_max, 10), d <= 3).
inline void RunStandardizeSuite(Battery& battery, const BatteryOptions& opt) {
  const std::size_t n_max = std::min<std::size_t>(opt.n_max, 10);
  for (std::uint64_t s = opt.seed_start; s < opt.seed_start + opt.seeds; ++s) {
    std::mt19937_64 rng(s ^ 0x165667b19e3779f9ULL);
    const std::size_t d = 1 + rng() % 3;
    const std::size_t n = 1 + rng() % n_max;
    auto raw = gen::RandomRawKnapsack(n, d, s);
    auto inst = Standardize(raw.costs, raw.caps);
    const std::string name = "seed=" + std::to_string(s) + " n=" + std::to_string(n) +
                             " d=" + std::to_string(d);
    bool in_range = true;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& c = inst.costs.at(i, j);
        if (c < 1 || c > inst.capacity) in_range = false;
      }
    }
    battery.Record("std.range", in_range, name);
    battery.Record("std.capacity", inst.capacity == inst.b_prime / inst.c_prime, name);
    const Constraint before = DKnapsack{raw.costs, raw.caps};
    const Constraint after = inst.AsConstraint();
    const auto ground = Iota(n);
    bool same = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      auto set = SubsetOf(ground, mask);
      if (IsFeasible(before, set) != IsFeasible(after, set)) {
        same = false;
        break;
      }
    }
    battery.Record("std.equivalence", same, name);
  }
}

// Unconstrained solvers on random validated tables with n <= n_max.
inline void RunUnconstrainedSuite(Battery& battery, const BatteryOptions& opt) {
  for (std::uint64_t s = opt.seed_start; s < opt.seed_start + opt.seeds; ++s) {
    const std::size_t n = 2 + s % (opt.n_max - 1);
    auto table = gen::RandomSubmodularTable(n, s);
    const std::string name = "seed=" + std::to_string(s) + " n=" + std::to_string(n);
    const bool valid = ValidateSubmodular(table).ok;
    battery.Record("uc.instance_valid", valid, name);
    if (!valid) continue;
    const double table_max = *std::max_element(table.values().begin(), table.values().end());
    const auto ground = Iota(n);
    Oracle o(table);
    const Solution exact = ExactUnconstrained(o, ground);
    battery.Record("uc.exact_is_max", exact.value == table_max, name);
    const Solution dg = DoubleGreedyDeterministic(o, ground);
    battery.Record("uc.dg_third", dg.value >= exact.value / 3.0 - 1e-9 &&
                                      dg.value <= exact.value,
                   name, exact.value > 0 ? std::optional<double>(dg.value / exact.value)
                                         : std::nullopt);
    double total = 0.0;
    for (std::uint64_t r = 0; r < opt.rdg_seeds; ++r) {
      total += DoubleGreedyRandomized(o, ground, r).value;
    }
    const double mean = opt.rdg_seeds ? total / static_cast<double>(opt.rdg_seeds) : 0.0;
    battery.Record("uc.rdg_mean", mean >= 0.45 * exact.value - 1e-9, name,
                   exact.value > 0 ? std::optional<double>(mean / exact.value) : std::nullopt);
  }
}

// Peak memory of the one-pass cardinality sieve across an epsilon sweep on
// one large instance (exact OPT not needed).
struct SweepPoint {
  double epsilon = 0.0;
  std::uint64_t peak = 0;
  std::uint64_t live_max = 0;
  std::size_t cap = 0;
};

inline std::vector<SweepPoint> MemorySweep(std::size_t k, std::span<const double> epsilons,
                                           std::size_t n, std::uint64_t seed) {
  gen::GraphParams p;
  p.edge_probability = 0.3;
  auto g = gen::RandomCutGraph(n, seed, p);
  const auto stream = gen::StreamOrder(n, true, seed);
  std::vector<SweepPoint> out;
  for (double eps : epsilons) {
    Oracle oracle(g);
    SieveOptions options;
    options.solver.kind = SolverKind::kDoubleGreedy;
    auto r = SieveCardOnePass(oracle, stream, k, eps, options);
    out.push_back({eps, r.stats.peak_resident_elements, r.stats.live_instances_max,
                   CardinalityMemoryCap(k, eps)});
  }
  return out;
}

// Memory growth against (1/eps) k log k: every point under its cap, peaks
// non-decreasing as eps shrinks, and peak / ((1/eps) k ln k) within a factor
// 2 band across the sweep.
inline void RunMemorySuite(Battery& battery, std::size_t k = 8, std::size_t n = 200,
                           std::uint64_t seed = 1) {
  const double epsilons[] = {0.5, 0.2, 0.1, 0.05};
  const auto points = MemorySweep(k, epsilons, n, seed);
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& pt = points[i];
    const std::string name = "eps=" + std::to_string(pt.epsilon) +
                             " peak=" + std::to_string(pt.peak) +
                             " cap=" + std::to_string(pt.cap);
    battery.Record("memory.sweep_cap", pt.peak <= pt.cap, name);
    if (i > 0) {
      battery.Record("memory.sweep_monotone", pt.peak >= points[i - 1].peak, name);
    }
    const double formula =
        static_cast<double>(k) * std::log(static_cast<double>(k)) / pt.epsilon;
    const double r = static_cast<double>(pt.peak) / formula;
    lo = i == 0 ? r : std::min(lo, r);
    hi = i == 0 ? r : std::max(hi, r);
  }
  if (!points.empty()) {
    battery.Record("memory.sweep_envelope", hi <= 2.0 * lo,
                   "peak/formula spans [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]",
                   lo > 0.0 ? std::optional<double>(hi / lo) : std::nullopt);
  }
}

inline constexpr std::string_view kSuites[] = {"cardinality", "knapsack", "standardize",
                                               "unconstrained", "memory"};

// Runs one named suite, or all of them for "all".
inline void RunSuite(Battery& battery, std::string_view suite, const BatteryOptions& opt) {
  if (suite == "all") {
    for (auto s : kSuites) RunSuite(battery, s, opt);
    return;
  }
  if (suite == "cardinality") return RunCardinalitySuite(battery, opt);
  if (suite == "knapsack") return RunKnapsackSuite(battery, opt);
  if (suite == "standardize") return RunStandardizeSuite(battery, opt);
  if (suite == "unconstrained") return RunUnconstrainedSuite(battery, opt);
  if (suite == "memory") {
    if (opt.seeds > 0) RunMemorySuite(battery);
    return;
  }
  throw ParameterError("unknown suite '" + std::string(suite) +
                       "' (cardinality|knapsack|standardize|unconstrained|memory|all)");
}

}  // namespace subsieve::harness
