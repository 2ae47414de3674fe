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
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "subsieve/errors.hpp"
#include "subsieve/oracle.hpp"
#include "subsieve/rational.hpp"

namespace subsieve {

// d x n matrix of exact costs, row-major: at(i, j) is the cost of element j in
// dimension i.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(std::size_t d, std::size_t n) : d_(d), n_(n), entries_(d * n) {}

  std::size_t dims() const { return d_; }
  std::size_t elements() const { return n_; }

  Rational& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  // Costs of element j across all d dimensions.
  std::vector<Rational> Column(std::size_t j) const {
    std::vector<Rational> col(d_);
    for (std::size_t i = 0; i < d_; ++i) col[i] = at(i, j);
    return col;
  }

  friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

 private:
  std::size_t d_ = 0;
  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

struct Cardinality {
  std::size_t k = 1;
};

// C x_S <= caps component-wise.
struct DKnapsack {
  CostMatrix costs;
  std::vector<Rational> caps;
};

using Constraint = std::variant<Cardinality, DKnapsack>;

namespace detail {

inline void CheckIds(std::span<const ElementId> set, std::size_t n) {
  for (ElementId u : set) {
    if (u >= n) {
      throw InputError("element id " + std::to_string(u) +
                       " out of range for " + std::to_string(n) + " elements");
    }
  }
}

}  // namespace detail

// Exact feasibility of S (plus u, when given). The empty set is always
// feasible. Throws InputError when the capacity vector does not match the
// cost matrix dimension or an id is out of range.
inline bool IsFeasible(const Constraint& constraint,
                       std::span<const ElementId> set,
                       std::optional<ElementId> extra = std::nullopt) {
  if (const auto* card = std::get_if<Cardinality>(&constraint)) {
    return set.size() + (extra ? 1 : 0) <= card->k;
  }
  const auto& knap = std::get<DKnapsack>(constraint);
  const CostMatrix& c = knap.costs;
  if (knap.caps.size() != c.dims()) {
    throw InputError("capacity vector has " + std::to_string(knap.caps.size()) +
                     " entries but the cost matrix has " +
                     std::to_string(c.dims()) + " dimensions");
  }
  detail::CheckIds(set, c.elements());
  if (extra) detail::CheckIds(std::span<const ElementId>(&*extra, 1), c.elements());
  for (std::size_t i = 0; i < c.dims(); ++i) {
    Rational load = 0;
    for (ElementId u : set) load += c.at(i, u);
    if (extra) load += c.at(i, *extra);
    if (load > knap.caps[i]) return false;
  }
  return true;
}

}  // namespace subsieve
