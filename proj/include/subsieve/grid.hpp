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
#include <climits>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "subsieve/errors.hpp"
#include "subsieve/threshold.hpp"

namespace subsieve {

// Lower end of the cardinality guess windows: the safe variant starts one
// grid step below the largest singleton value so some guess always falls in
// [OPT/(1+eps), OPT]; the tight variant starts at the singleton value itself.
enum class GridMode { kSafe, kTight };

inline GridMode ParseGridMode(std::string_view name) {
  if (name == "safe") return GridMode::kSafe;
  if (name == "tight" || name == "paper") return GridMode::kTight;
  throw ParameterError("unknown grid mode '" + std::string(name) + "' (expected safe|tight)");
}

// Closed range of integer exponents; empty when lo > hi.
struct ExponentRange {
  int lo = 0;
  int hi = -1;
  bool empty() const { return lo > hi; }
  std::size_t size() const { return empty() ? 0 : static_cast<std::size_t>(hi - lo + 1); }
  bool contains(int i) const { return lo <= i && i <= hi; }
};

// All i with lower <= base^i <= upper, widened by the relative guard band.
inline ExponentRange ExponentsWithin(double lower, double upper, double base) {
  if (!(upper > 0.0) || !(lower > 0.0) || upper < lower) return {};
  const double log_base = std::log(base);
  const double lo = (std::log(lower) + std::log1p(-kGuard)) / log_base;
  const double hi = (std::log(upper) + std::log1p(kGuard)) / log_base;
  return {static_cast<int>(std::ceil(lo)), static_cast<int>(std::floor(hi))};
}

// Geometric guesses (1+eps)^i keyed by exponent. The window only moves up;
// an exponent that leaves it is deleted and never instantiated again.
template <typename Instance>
class GuessGrid {
 public:
  explicit GuessGrid(double epsilon) : base_(1.0 + epsilon) {}

  double base() const { return base_; }
  double Value(int exponent) const { return std::pow(base_, exponent); }

  // Moves the window to [lower, upper]; `make(exponent, value)` builds each
  // newly admitted instance.
  template <typename Make>
  void Slide(double lower, double upper, Make&& make) {
    const ExponentRange window = ExponentsWithin(lower, upper, base_);
    if (window.empty()) {
      return;
    }
    live_.erase(live_.begin(), live_.lower_bound(window.lo));
    live_.erase(live_.upper_bound(window.hi), live_.end());
    int first = window.lo;
    if (created_any_) first = std::max(first, highest_created_ + 1);
    for (int i = first; i <= window.hi; ++i) {
      live_.emplace(i, make(i, Value(i)));
      highest_created_ = i;
      created_any_ = true;
    }
    window_ = window;
  }

  const ExponentRange& window() const { return window_; }
  std::map<int, Instance>& live() { return live_; }
  const std::map<int, Instance>& live() const { return live_; }
  std::size_t size() const { return live_.size(); }

 private:
  double base_;
  std::map<int, Instance> live_;
  ExponentRange window_;
  int highest_created_ = INT_MIN;
  bool created_any_ = false;
};

}  // namespace subsieve
