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

// Weighted coverage: ground element j covers sets()[j]; f(S) is the weight of
// the union. Monotone submodular with f(empty) = 0.
class CoverageOracle final : public SetFunction {
 public:
  CoverageOracle(std::vector<double> item_weights,
                 std::vector<std::vector<std::size_t>> sets)
      : weights_(std::move(item_weights)), sets_(std::move(sets)) {
    for (double w : weights_) {
      if (!(w >= 0.0)) throw InputError("negative universe item weight");
    }
    for (const auto& s : sets_) {
      for (std::size_t item : s) {
        if (item >= weights_.size()) {
          throw InputError("universe item " + std::to_string(item) +
                           " out of range");
        }
      }
    }
  }

  std::size_t GroundSize() const override { return sets_.size(); }
  std::size_t UniverseSize() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<std::vector<std::size_t>>& sets() const { return sets_; }

  double Evaluate(std::span<const ElementId> set) const override {
    std::vector<bool> covered(weights_.size(), false);
    for (ElementId u : set) {
      if (u >= sets_.size()) {
        throw InputError("element " + std::to_string(u) + " out of range");
      }
      for (std::size_t item : sets_[u]) covered[item] = true;
    }
    double total = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (covered[i]) total += weights_[i];
    }
    return total;
  }

 private:
  std::vector<double> weights_;
  std::vector<std::vector<std::size_t>> sets_;
};

inline double CoverageValue(const CoverageOracle& oracle,
                            std::span<const ElementId> set) {
  return oracle.Evaluate(set);
}

}  // namespace subsieve
