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

#include <vector>

#include "subsieve/oracles/cut.hpp"
#include "subsieve/oracles/table.hpp"

namespace subsieve::testing {

// Path a - b - c with unit weights; a=0, b=1, c=2.
// f: {}=0 a=1 b=2 c=1 ab=1 ac=2 bc=1 abc=0.
inline CutOracle P3() {
  return CutOracle(3, {{0, 1, 1.0}, {1, 2, 1.0}}, false);
}

inline constexpr ElementId kA = 0;
inline constexpr ElementId kB = 1;
inline constexpr ElementId kC = 2;

// f(S) = |S|.
inline TableOracle ModularTable(std::size_t n) {
  std::vector<double> v(std::size_t{1} << n);
  for (std::size_t m = 0; m < v.size(); ++m) v[m] = __builtin_popcountll(m);
  return TableOracle(n, std::move(v));
}

}  // namespace subsieve::testing
