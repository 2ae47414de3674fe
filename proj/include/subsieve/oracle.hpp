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
#include <span>
#include <vector>

namespace subsieve {

// Dense element index in [0, n), assigned by ingestion order of the instance
// file (not by stream order).
using ElementId = std::uint32_t;

// A non-negative set function over the ground set {0, ..., GroundSize()-1}.
// Implementations must be pure: the same set always yields the same value.
// Sets are passed as id lists without duplicates, in any order.
class SetFunction {
 public:
  virtual ~SetFunction() = default;
  virtual std::size_t GroundSize() const = 0;
  virtual double Evaluate(std::span<const ElementId> set) const = 0;
};

// Query-counting view of a SetFunction. Every algorithm talks to the
// function only through this wrapper, so query_count() is the exact number of
// value-oracle calls a run made. One Oracle per run; not thread-safe.
class Oracle {
 public:
  explicit Oracle(const SetFunction& f) : f_(&f) {}

  double Evaluate(std::span<const ElementId> set) {
    ++queries_;
    return f_->Evaluate(set);
  }
  double Evaluate(std::initializer_list<ElementId> set) {
    return Evaluate(std::span<const ElementId>(set.begin(), set.size()));
  }
  double Singleton(ElementId u) {
    const ElementId one[1] = {u};
    return Evaluate(one);
  }

  std::uint64_t query_count() const { return queries_; }
  std::size_t GroundSize() const { return f_->GroundSize(); }
  const SetFunction& function() const { return *f_; }

 private:
  const SetFunction* f_;
  std::uint64_t queries_ = 0;
};

// Element ids of bitmask `mask` relative to `ground` (bit i = ground[i]).
inline std::vector<ElementId> SubsetOf(std::span<const ElementId> ground,
                                       std::uint64_t mask) {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (mask >> i & 1U) out.push_back(ground[i]);
  }
  return out;
}

inline std::vector<ElementId> Iota(std::size_t n) {
  std::vector<ElementId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<ElementId>(i);
  return ids;
}

}  // namespace subsieve
