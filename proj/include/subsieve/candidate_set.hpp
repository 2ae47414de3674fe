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
#include <span>
#include <string>
#include <vector>

#include "subsieve/errors.hpp"
#include "subsieve/oracle.hpp"
#include "subsieve/rational.hpp"

namespace subsieve {

// Result of tentatively adding one element to a CandidateSet.
struct Probe {
  ElementId id = 0;
  double value_with = 0.0;  // f(S + u)
  double gain = 0.0;        // f(u | S)
};

// Accepted ids in insertion order with a cached f(S) and, for knapsack runs,
// the per-dimension cost load. The cache is refreshed from the probe that
// admitted each element, so a marginal costs exactly one oracle query.
class CandidateSet {
 public:
  CandidateSet() = default;
  // `empty_value` is f(empty set), queried once per run by the owner.
  explicit CandidateSet(double empty_value, std::size_t dims = 0)
      : value_(empty_value), load_(dims, Rational(0)) {}

  const std::vector<ElementId>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  double value() const { return value_; }
  std::span<const Rational> load() const { return load_; }

  bool Contains(ElementId u) const {
    return std::find(ids_.begin(), ids_.end(), u) != ids_.end();
  }

  Probe ProbeAdd(Oracle& oracle, ElementId u) const {
    if (Contains(u)) {
      throw ContractError("marginal of element " + std::to_string(u) +
                          " requested against a set that already holds it");
    }
    scratch_.assign(ids_.begin(), ids_.end());
    scratch_.push_back(u);
    double with = oracle.Evaluate(scratch_);
    return Probe{u, with, with - value_};
  }

  // True when adding `cost` keeps every dimension within `capacity`.
  bool Fits(std::span<const Rational> cost, const Rational& capacity) const {
    for (std::size_t i = 0; i < load_.size(); ++i) {
      if (load_[i] + cost[i] > capacity) return false;
    }
    return true;
  }

  void Commit(const Probe& probe, std::span<const Rational> cost = {}) {
    ids_.push_back(probe.id);
    value_ = probe.value_with;
    for (std::size_t i = 0; i < load_.size() && i < cost.size(); ++i) {
      load_[i] += cost[i];
    }
  }

 private:
  std::vector<ElementId> ids_;
  double value_ = 0.0;
  std::vector<Rational> load_;
  mutable std::vector<ElementId> scratch_;
};

// f(u | S). Issues exactly one query; throws ContractError when u is in S.
inline double Marginal(Oracle& oracle, ElementId u, const CandidateSet& set) {
  return set.ProbeAdd(oracle, u).gain;
}

}  // namespace subsieve
