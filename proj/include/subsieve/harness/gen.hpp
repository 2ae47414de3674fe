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
#include <ostream>
#include <string>

#include "subsieve/oracles/generators.hpp"
#include "subsieve/oracles/io.hpp"

namespace subsieve::harness {

// Parameters for `gen`. Unused fields are ignored by a given kind.
struct GenSpec {
  std::string kind = "cut";  // cut | family | table | costs
  std::size_t n = 8;
  std::uint64_t seed = 0;
  gen::GraphParams graph;
  gen::FamilyParams family;
  gen::CostParams costs;
};

inline void CheckGenSpec(const GenSpec& s) {
  const auto& g = s.graph;
  if (!(g.edge_probability >= 0.0 && g.edge_probability <= 1.0)) {
    throw ParameterError("edge probability must lie in [0, 1]");
  }
  if (g.weight_min_milli < 0 || g.weight_min_milli > g.weight_max_milli) {
    throw ParameterError("need 0 <= weight min <= weight max");
  }
  const auto& f = s.family;
  if (!(f.cover_probability >= 0.0 && f.cover_probability <= 1.0)) {
    throw ParameterError("cover probability must lie in [0, 1]");
  }
  if (f.weight_min_milli < 0 || f.weight_min_milli > f.weight_max_milli) {
    throw ParameterError("need 0 <= item weight min <= item weight max");
  }
  if (s.costs.dims < 1) throw ParameterError("d must be at least 1");
  if (s.costs.capacity < 1) throw ParameterError("b must be at least 1");
  if (s.costs.max_denominator < 1) throw ParameterError("denominator must be at least 1");
}

// Writes the instance file for `s` to `out`. Identical specs give identical
// bytes.
inline void Generate(const GenSpec& s, std::ostream& out) {
  CheckGenSpec(s);
  if (s.kind == "cut") {
    io::WriteGraph(out, gen::RandomCutGraph(s.n, s.seed, s.graph));
  } else if (s.kind == "family" || s.kind == "coverage") {
    io::WriteFamily(out, gen::RandomFamily(s.n, s.seed, s.family));
  } else if (s.kind == "table") {
    io::WriteTable(out, gen::RandomSubmodularTable(s.n, s.seed));
  } else if (s.kind == "costs") {
    io::WriteCosts(out, gen::RandomCosts(s.n, s.seed, s.costs));
  } else {
    throw ParameterError("unknown gen kind '" + s.kind + "' (cut|family|table|costs)");
  }
}

}  // namespace subsieve::harness
