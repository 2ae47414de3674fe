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
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subsieve/errors.hpp"
#include "subsieve/oracle.hpp"
#include "subsieve/stream.hpp"

namespace subsieve {

inline constexpr std::size_t kMaxExactElements = 22;

// argmax of f over all subsets of `ground`; ties go to the smallest bitmask
// (bit i = ground[i]). 2^|ground| queries.
inline Solution ExactUnconstrained(Oracle& oracle,
                                   std::span<const ElementId> ground) {
  if (ground.size() > kMaxExactElements) {
    throw SizeError("exact unconstrained solve limited to " +
                    std::to_string(kMaxExactElements) + " elements, got " +
                    std::to_string(ground.size()));
  }
  Solution best;
  std::uint64_t best_mask = 0;
  const std::uint64_t count = std::uint64_t{1} << ground.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const double value = oracle.Evaluate(SubsetOf(ground, mask));
    if (mask == 0 || value > best.value) {
      best.value = value;
      best_mask = mask;
    }
  }
  best.ids = SubsetOf(ground, best_mask);
  return best;
}

namespace detail {

inline std::vector<ElementId> Without(const std::vector<ElementId>& set,
                                      ElementId u) {
  std::vector<ElementId> out;
  out.reserve(set.size());
  for (ElementId x : set) {
    if (x != u) out.push_back(x);
  }
  return out;
}

// Shared sweep: X grows from empty, Y shrinks from ground. `take(a, r)`
// decides whether u joins X (true) or leaves Y (false).
template <typename Decide>
Solution DoubleGreedySweep(Oracle& oracle, std::span<const ElementId> ground,
                           Decide&& take) {
  std::vector<ElementId> x;
  std::vector<ElementId> y(ground.begin(), ground.end());
  double fx = oracle.Evaluate(x);
  double fy = oracle.Evaluate(y);
  for (ElementId u : ground) {
    x.push_back(u);
    const double fx_plus = oracle.Evaluate(x);
    x.pop_back();
    auto y_minus = Without(y, u);
    const double fy_minus = oracle.Evaluate(y_minus);
    const double add_gain = fx_plus - fx;
    const double remove_gain = fy_minus - fy;
    if (take(add_gain, remove_gain)) {
      x.push_back(u);
      fx = fx_plus;
    } else {
      y = std::move(y_minus);
      fy = fy_minus;
    }
  }
  return Solution{std::move(x), fx};
}

}  // namespace detail

// Deterministic double greedy over `ground` in the given order; keeps u when
// f(u | X) >= f(Y - u) - f(Y). Guarantees at least a third of the optimum.
inline Solution DoubleGreedyDeterministic(Oracle& oracle,
                                          std::span<const ElementId> ground) {
  return detail::DoubleGreedySweep(
      oracle, ground, [](double a, double r) { return a >= r; });
}

// Randomized double greedy: keeps u with probability a+/(a+ + r+), and always
// when both clamped gains are zero. Half the optimum in expectation.
inline Solution DoubleGreedyRandomized(Oracle& oracle,
                                       std::span<const ElementId> ground,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return detail::DoubleGreedySweep(oracle, ground, [&](double a, double r) {
    const double ap = a > 0.0 ? a : 0.0;
    const double rp = r > 0.0 ? r : 0.0;
    const double draw = unit(rng);
    if (ap + rp == 0.0) return true;
    return draw < ap / (ap + rp);
  });
}

enum class SolverKind { kExact, kDoubleGreedy, kRandomDoubleGreedy };

inline std::string_view SolverName(SolverKind kind) {
  switch (kind) {
    case SolverKind::kExact: return "exact";
    case SolverKind::kDoubleGreedy: return "dg";
    case SolverKind::kRandomDoubleGreedy: return "rdg";
  }
  return "?";
}

inline SolverKind ParseSolverKind(std::string_view name) {
  if (name == "exact") return SolverKind::kExact;
  if (name == "dg") return SolverKind::kDoubleGreedy;
  if (name == "rdg") return SolverKind::kRandomDoubleGreedy;
  throw ParameterError("unknown solver '" + std::string(name) +
                       "' (expected exact|dg|rdg)");
}

// The post-pass subroutine applied to S1. gamma() is the declared worst-case
// ratio; for the randomized kind it only holds in expectation.
struct UnconstrainedSolver {
  SolverKind kind = SolverKind::kExact;
  std::uint64_t seed = 0;

  double gamma() const {
    switch (kind) {
      case SolverKind::kExact: return 1.0;
      case SolverKind::kDoubleGreedy: return 1.0 / 3.0;
      case SolverKind::kRandomDoubleGreedy: return 0.5;
    }
    return 0.0;
  }
  bool deterministic() const { return kind != SolverKind::kRandomDoubleGreedy; }

  Solution Solve(Oracle& oracle, std::span<const ElementId> ground) const {
    switch (kind) {
      case SolverKind::kExact: return ExactUnconstrained(oracle, ground);
      case SolverKind::kDoubleGreedy:
        return DoubleGreedyDeterministic(oracle, ground);
      case SolverKind::kRandomDoubleGreedy:
        return DoubleGreedyRandomized(oracle, ground, seed);
    }
    return {};
  }
};

}  // namespace subsieve
