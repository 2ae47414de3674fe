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
#include <cstdint>
#include <random>
#include <vector>

#include "subsieve/constraint.hpp"
#include "subsieve/oracles/coverage.hpp"
#include "subsieve/oracles/cut.hpp"
#include "subsieve/oracles/table.hpp"
#include "subsieve/rational.hpp"

// Seeded instance generators. Weights are drawn as integer thousandths so a
// generated instance survives a write/read round trip bit-for-bit.

namespace subsieve::gen {

using Rng = std::mt19937_64;

struct GraphParams {
  double edge_probability = 0.5;
  std::int64_t weight_min_milli = 1000;
  std::int64_t weight_max_milli = 10000;
  bool directed = false;
};

// Erdos-Renyi graph with uniform edge weights.
inline CutOracle RandomCutGraph(std::size_t n, std::uint64_t seed,
                                const GraphParams& p = {}) {
  Rng rng(seed);
  std::bernoulli_distribution keep(p.edge_probability);
  std::uniform_int_distribution<std::int64_t> weight(p.weight_min_milli,
                                                     p.weight_max_milli);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = p.directed ? 0 : u + 1; v < n; ++v) {
      if (u == v || !keep(rng)) continue;
      edges.push_back({static_cast<ElementId>(u), static_cast<ElementId>(v),
                       static_cast<double>(weight(rng)) / 1000.0});
    }
  }
  return CutOracle(n, std::move(edges), p.directed);
}

struct FamilyParams {
  std::size_t universe = 16;
  double cover_probability = 0.25;
  std::int64_t weight_min_milli = 1000;
  std::int64_t weight_max_milli = 5000;
};

inline CoverageOracle RandomFamily(std::size_t n, std::uint64_t seed,
                                   const FamilyParams& p = {}) {
  Rng rng(seed);
  std::uniform_int_distribution<std::int64_t> weight(p.weight_min_milli,
                                                     p.weight_max_milli);
  std::bernoulli_distribution covers(p.cover_probability);
  std::vector<double> weights(p.universe);
  for (double& w : weights) w = static_cast<double>(weight(rng)) / 1000.0;
  std::vector<std::vector<std::size_t>> sets(n);
  for (auto& s : sets) {
    for (std::size_t item = 0; item < p.universe; ++item) {
      if (covers(rng)) s.push_back(item);
    }
  }
  return CoverageOracle(std::move(weights), std::move(sets));
}

// Integer-valued non-negative submodular table: a random undirected cut plus
// a random coverage function plus a budget-additive term min(w(S), cap),
// plus `empty_value` everywhere. Non-monotone whenever the cut is non-trivial.
inline TableOracle RandomSubmodularTable(std::size_t n, std::uint64_t seed,
                                         double empty_value = 0.0) {
  Rng rng(seed);
  std::uniform_int_distribution<int> small(0, 9);
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) {
        edges.push_back({static_cast<ElementId>(u), static_cast<ElementId>(v),
                         static_cast<double>(small(rng))});
      }
    }
  }
  CutOracle cut(n, std::move(edges), false);
  const std::size_t universe = std::max<std::size_t>(n, 4);
  std::vector<double> item_w(universe);
  for (double& w : item_w) w = static_cast<double>(small(rng));
  std::bernoulli_distribution sparse(0.3);
  std::vector<std::vector<std::size_t>> sets(n);
  for (auto& s : sets) {
    for (std::size_t item = 0; item < universe; ++item) {
      if (sparse(rng)) s.push_back(item);
    }
  }
  CoverageOracle cover(std::move(item_w), std::move(sets));
  std::vector<double> modular(n);
  for (double& w : modular) w = static_cast<double>(small(rng));
  const double cap = static_cast<double>(std::uniform_int_distribution<int>(0, 20)(rng));

  const auto ground = Iota(n);
  std::vector<double> values(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < values.size(); ++mask) {
    auto s = SubsetOf(ground, mask);
    double budget = 0.0;
    for (ElementId u : s) budget += modular[u];
    values[mask] =
        cut.Evaluate(s) + cover.Evaluate(s) + std::min(budget, cap) + empty_value;
  }
  return TableOracle(n, std::move(values));
}

struct CostParams {
  std::size_t dims = 1;
  std::int64_t capacity = 4;        // b; entries land in [1, b]
  std::int64_t max_denominator = 4;
};

// Costs already in standardized range: every entry a rational in [1, b].
inline CostMatrix RandomCosts(std::size_t n, std::uint64_t seed,
                              const CostParams& p = {}) {
  Rng rng(seed);
  std::uniform_int_distribution<std::int64_t> den(1, p.max_denominator);
  CostMatrix c(p.dims, n);
  for (std::size_t i = 0; i < p.dims; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t q = den(rng);
      std::uniform_int_distribution<std::int64_t> num(q, p.capacity * q);
      c.at(i, j) = Rational(num(rng), q);
    }
  }
  return c;
}

struct RawKnapsack {
  CostMatrix costs;
  std::vector<Rational> caps;
};

// Unstandardized instance: per-dimension capacities in [1, max_cap] (possibly
// fractional) and costs in (0, b_i].
inline RawKnapsack RandomRawKnapsack(std::size_t n, std::size_t dims,
                                     std::uint64_t seed,
                                     std::int64_t max_cap = 12,
                                     std::int64_t max_denominator = 5) {
  Rng rng(seed);
  std::uniform_int_distribution<std::int64_t> den(1, max_denominator);
  RawKnapsack out{CostMatrix(dims, n), std::vector<Rational>(dims)};
  for (std::size_t i = 0; i < dims; ++i) {
    const std::int64_t q = den(rng);
    std::uniform_int_distribution<std::int64_t> num(q, max_cap * q);
    out.caps[i] = Rational(num(rng), q);
    for (std::size_t j = 0; j < n; ++j) {
      // Uniform on the grid {t / 60 * b_i : t = 1..60}.
      const std::int64_t t = std::uniform_int_distribution<std::int64_t>(1, 60)(rng);
      out.costs.at(i, j) = out.caps[i] * Rational(t, 60);
    }
  }
  return out;
}

// Stream order: identity, or a seeded shuffle of it.
inline std::vector<ElementId> StreamOrder(std::size_t n, bool shuffle,
                                          std::uint64_t seed) {
  auto order = Iota(n);
  if (shuffle) {
    Rng rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  return order;
}

}  // namespace subsieve::gen
