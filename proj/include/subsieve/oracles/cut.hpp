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
#include <span>
#include <string>
#include <vector>

#include "subsieve/errors.hpp"
#include "subsieve/oracle.hpp"

namespace subsieve {

struct Edge {
  ElementId u = 0;
  ElementId v = 0;
  double w = 0.0;
};

// Weighted cut function: f(S) = total weight of edges leaving S (directed) or
// crossing S (undirected). Non-negative, submodular, and in general
// non-monotone.
class CutOracle final : public SetFunction {
 public:
  CutOracle(std::size_t n, std::vector<Edge> edges, bool directed)
      : n_(n), edges_(std::move(edges)), directed_(directed) {
    for (const Edge& e : edges_) {
      if (e.u >= n_ || e.v >= n_) {
        throw InputError("edge endpoint out of range for " +
                         std::to_string(n_) + " vertices");
      }
      if (!(e.w >= 0.0)) throw InputError("negative edge weight");
    }
  }

  std::size_t GroundSize() const override { return n_; }
  bool directed() const { return directed_; }
  const std::vector<Edge>& edges() const { return edges_; }

  double Evaluate(std::span<const ElementId> set) const override {
    std::vector<bool> in(n_, false);
    for (ElementId u : set) {
      if (u >= n_) {
        throw InputError("vertex " + std::to_string(u) + " out of range");
      }
      in[u] = true;
    }
    double total = 0.0;
    for (const Edge& e : edges_) {
      if (directed_ ? (in[e.u] && !in[e.v]) : (in[e.u] != in[e.v])) {
        total += e.w;
      }
    }
    return total;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  bool directed_;
};

inline double CutValue(const CutOracle& oracle, std::span<const ElementId> set) {
  return oracle.Evaluate(set);
}

}  // namespace subsieve
