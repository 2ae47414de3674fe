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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subsieve/errors.hpp"
#include "subsieve/oracle.hpp"

namespace subsieve {

inline constexpr std::size_t kMaxTableElements = 20;

// Explicit value table: values()[mask] = f(S), bit i of mask = element i.
class TableOracle final : public SetFunction {
 public:
  TableOracle(std::size_t n, std::vector<double> values)
      : n_(n), values_(std::move(values)) {
    if (n_ > kMaxTableElements) {
      throw SizeError("value tables support at most " +
                      std::to_string(kMaxTableElements) + " elements");
    }
    if (values_.size() != (std::size_t{1} << n_)) {
      throw InputError("value table for n=" + std::to_string(n_) +
                       " needs " + std::to_string(std::size_t{1} << n_) +
                       " entries, got " + std::to_string(values_.size()));
    }
  }

  std::size_t GroundSize() const override { return n_; }
  const std::vector<double>& values() const { return values_; }
  double at(std::uint32_t mask) const { return values_[mask]; }

  double Evaluate(std::span<const ElementId> set) const override {
    std::uint32_t mask = 0;
    for (ElementId u : set) {
      if (u >= n_) throw InputError("element " + std::to_string(u) + " out of range");
      mask |= std::uint32_t{1} << u;
    }
    return values_[mask];
  }

 private:
  std::size_t n_;
  std::vector<double> values_;
};

// Evaluates `f` on every subset of its ground set. Not query-counted.
inline TableOracle Tabulate(const SetFunction& f) {
  const std::size_t n = f.GroundSize();
  if (n > kMaxTableElements) {
    throw SizeError("cannot tabulate more than " +
                    std::to_string(kMaxTableElements) + " elements");
  }
  const auto ground = Iota(n);
  std::vector<double> values(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < values.size(); ++mask) {
    values[mask] = f.Evaluate(SubsetOf(ground, mask));
  }
  return TableOracle(n, std::move(values));
}

// Why a table failed validation. For a diminishing-returns violation,
// f(u | S) < f(u | S + v); for a negative value, `set` is the offending mask
// and u == v == n.
struct SubmodularityWitness {
  std::uint32_t set = 0;
  ElementId u = 0;
  ElementId v = 0;
  std::string Describe() const {
    return "S=" + std::to_string(set) + " u=" + std::to_string(u) +
           " v=" + std::to_string(v);
  }
};

struct SubmodularityCheck {
  bool ok = true;
  std::optional<SubmodularityWitness> witness;
  explicit operator bool() const { return ok; }
};

// Exhaustive check of non-negativity and f(u|S) >= f(u|S+v) for all S and
// distinct u, v outside S. Comparisons allow `tolerance` relative to the
// largest magnitude in the table. The first violation in (S, u, v)
// lexicographic order is reported.
inline SubmodularityCheck ValidateSubmodular(const TableOracle& table,
                                             double tolerance = 1e-9) {
  const std::size_t n = table.GroundSize();
  const auto& f = table.values();
  double scale = 1.0;
  for (double x : f) scale = std::max(scale, std::abs(x));
  const double slack = tolerance * scale;
  const auto full = static_cast<std::uint32_t>(f.size());
  for (std::uint32_t s = 0; s < full; ++s) {
    if (f[s] < -slack) {
      return {false, SubmodularityWitness{s, static_cast<ElementId>(n),
                                          static_cast<ElementId>(n)}};
    }
  }
  for (std::uint32_t s = 0; s < full; ++s) {
    for (std::size_t u = 0; u < n; ++u) {
      const std::uint32_t bu = std::uint32_t{1} << u;
      if (s & bu) continue;
      const double gain = f[s | bu] - f[s];
      for (std::size_t v = 0; v < n; ++v) {
        const std::uint32_t bv = std::uint32_t{1} << v;
        if (v == u || (s & bv)) continue;
        const double later = f[s | bu | bv] - f[s | bv];
        if (gain < later - slack) {
          return {false,
                  SubmodularityWitness{s, static_cast<ElementId>(u),
                                       static_cast<ElementId>(v)}};
        }
      }
    }
  }
  return {};
}

}  // namespace subsieve
