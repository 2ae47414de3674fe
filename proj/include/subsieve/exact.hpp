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
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subsieve/constraint.hpp"
#include "subsieve/errors.hpp"
#include "subsieve/oracle.hpp"
#include "subsieve/unconstrained.hpp"

namespace subsieve {

struct ExactResult {
  std::vector<ElementId> opt_set;
  double opt_value = 0.0;
  std::uint64_t feasible_count = 0;
};

// Brute-force constrained optimum over all 2^n subsets of {0..n-1}; ties go to
// the smallest bitmask. Knapsack feasibility is exact.
inline ExactResult ExactOpt(Oracle& oracle, const Constraint& constraint,
                            std::size_t n) {
  if (n > kMaxExactElements) {
    throw SizeError("exact optimum limited to " + std::to_string(kMaxExactElements) +
                    " elements, got " + std::to_string(n));
  }
  const auto ground = Iota(n);
  const std::uint64_t count = std::uint64_t{1} << n;

  // Per-dimension loads for knapsack constraints, built incrementally from
  // the mask with its lowest bit cleared.
  const auto* knap = std::get_if<DKnapsack>(&constraint);
  std::vector<std::vector<Rational>> load;
  if (knap) {
    if (knap->caps.size() != knap->costs.dims()) {
      throw InputError("capacity vector does not match cost matrix dimension");
    }
    if (knap->costs.elements() < n) {
      throw InputError("cost matrix has fewer columns than elements");
    }
    load.assign(knap->costs.dims(), std::vector<Rational>(count));
  }
  const std::size_t k =
      knap ? 0 : std::get<Cardinality>(constraint).k;

  ExactResult best;
  bool found = false;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    bool feasible = true;
    if (knap) {
      if (mask != 0) {
        const std::uint64_t rest = mask & (mask - 1);
        const auto low = static_cast<std::size_t>(std::countr_zero(mask));
        for (std::size_t i = 0; i < load.size(); ++i) {
          load[i][mask] = load[i][rest] + knap->costs.at(i, low);
          if (load[i][mask] > knap->caps[i]) feasible = false;
        }
      }
    } else {
      feasible = static_cast<std::size_t>(std::popcount(mask)) <= k;
    }
    if (!feasible) continue;
    ++best.feasible_count;
    const double value = oracle.Evaluate(SubsetOf(ground, mask));
    if (!found || value > best.opt_value) {
      best.opt_value = value;
      best_mask = mask;
      found = true;
    }
  }
  best.opt_set = SubsetOf(ground, best_mask);
  return best;
}

struct RatioVerdict {
  bool pass = false;
  std::optional<double> margin;  // run_value / opt_value when opt_value > 0
};

// run_value >= bound * OPT up to 1e-9 relative; OPT = 0 passes trivially.
inline RatioVerdict VerifyRatio(double run_value, const ExactResult& exact,
                                double bound) {
  if (!(bound >= 0.0 && bound <= 1.0)) {
    throw ParameterError("ratio bound must lie in [0, 1], got " + std::to_string(bound));
  }
  const double opt = exact.opt_value;
  RatioVerdict verdict;
  if (opt > 0.0) verdict.margin = run_value / opt;
  if (opt == 0.0) {
    verdict.pass = true;
    return verdict;
  }
  verdict.pass = run_value >= bound * opt - 1e-9 * std::max(1.0, opt);
  return verdict;
}

}  // namespace subsieve
