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
#include <cstddef>
#include <string>
#include <string_view>

#include "subsieve/errors.hpp"

namespace subsieve {

// Relative guard band for floating-point threshold tests. A value clears a
// threshold t when value * (1 + kGuard) >= t; grid membership widens by the
// same factor, so an element that was below every live threshold before an
// instance existed is also below it afterwards.
inline constexpr double kGuard = 1e-12;

inline bool ClearsThreshold(double value, double threshold) {
  return value * (1.0 + kGuard) >= threshold;
}

enum class ThresholdMode { kClassic, kGeneralized };

// How tau is derived from a guess v.
//
// kClassic uses tau = v/6 (cardinality) and tau = v/(4(d+1)) (d-knapsack),
// which are calibrated for a 1/2-approximate unconstrained solver.
//
// kGeneralized retunes tau for a solver of ratio gamma. Write A = f(S1 cap O)
// and let T be the additive loss of the two-candidate bound: T = tau for
// cardinality, T = 2 d tau for d-knapsack. When no candidate fills up,
//   f(out) >= max(gamma * A, OPT/2 - A/2 - T),
// minimized over A at gamma * (v - 2T) / (2 gamma + 1). Full candidates and
// big elements give f(out) >= tau directly. Equating both cases:
//   cardinality: tau = gamma / (4 gamma + 1) * v
//   d-knapsack:  tau = gamma / (2 gamma + 1 + 4 d gamma) * v
// and at gamma = 1/2 these are exactly the kClassic constants.
struct ThresholdRule {
  ThresholdMode mode = ThresholdMode::kClassic;
  double gamma = 0.5;  // used by kGeneralized only

  double CardinalityFactor() const {
    if (mode == ThresholdMode::kClassic) return 1.0 / 6.0;
    return gamma / (4.0 * gamma + 1.0);
  }
  double KnapsackFactor(std::size_t d) const {
    if (mode == ThresholdMode::kClassic) return 1.0 / (4.0 * (static_cast<double>(d) + 1.0));
    return gamma / (2.0 * gamma + 1.0 + 4.0 * static_cast<double>(d) * gamma);
  }
};

// Certified f(out)/v when tau = c*v and the post-pass solver has ratio
// `solver_gamma` (same case analysis as above, without retuning tau).
inline double CardinalityGuarantee(double c, double solver_gamma) {
  const double two_set = solver_gamma * (1.0 - 2.0 * c) / (2.0 * solver_gamma + 1.0);
  return std::max(0.0, std::min(c, two_set));
}

inline double KnapsackGuarantee(double c, double solver_gamma, std::size_t d) {
  const double loss = 4.0 * static_cast<double>(d) * c;
  const double two_set = solver_gamma * (1.0 - loss) / (2.0 * solver_gamma + 1.0);
  return std::max(0.0, std::min(c, two_set));
}

inline void CheckEpsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw ParameterError("epsilon must lie in (0, 1], got " + std::to_string(epsilon));
  }
}

}  // namespace subsieve
