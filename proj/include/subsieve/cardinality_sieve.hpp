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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subsieve/candidate_set.hpp"
#include "subsieve/errors.hpp"
#include "subsieve/grid.hpp"
#include "subsieve/oracle.hpp"
#include "subsieve/stream.hpp"
#include "subsieve/threshold.hpp"
#include "subsieve/unconstrained.hpp"

namespace subsieve {

struct SieveOptions {
  UnconstrainedSolver solver;
  ThresholdRule threshold;
  GridMode grid = GridMode::kSafe;
};

namespace detail {

// Running argmax with first-offered-wins tie-breaking.
class BestOf {
 public:
  void Offer(std::span<const ElementId> ids, double value) {
    if (!has_ || value > best_.value) {
      best_.ids.assign(ids.begin(), ids.end());
      best_.value = value;
      has_ = true;
    }
  }
  bool has() const { return has_; }
  Solution Take(double fallback_value) && {
    if (!has_) return Solution{{}, fallback_value};
    return std::move(best_);
  }

 private:
  Solution best_;
  bool has_ = false;
};

inline std::vector<ElementId> SortedIds(std::span<const ElementId> ids) {
  std::vector<ElementId> out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// One guess v of OPT for the cardinality sieve: two candidate sets that
// admit elements whose marginal clears tau/k, S1 first, then S2.
class CardinalityInstance {
 public:
  CardinalityInstance(double v, double tau, std::size_t k, double empty_value)
      : v_(v), tau_(tau), k_(k), s1_(empty_value), s2_(empty_value) {}

  double v() const { return v_; }
  double tau() const { return tau_; }
  const CandidateSet& s1() const { return s1_; }
  const CandidateSet& s2() const { return s2_; }
  const std::optional<Solution>& s3() const { return s3_; }

  // Returns 1 or 2 for the set that took u, 0 if rejected.
  int Process(Oracle& oracle, ElementId u) {
    const double bar = tau_ / static_cast<double>(k_);
    if (s1_.size() < k_) {
      Probe p = s1_.ProbeAdd(oracle, u);
      if (ClearsThreshold(p.gain, bar)) {
        s1_.Commit(p);
        return 1;
      }
    }
    if (s2_.size() < k_) {
      Probe p = s2_.ProbeAdd(oracle, u);
      if (ClearsThreshold(p.gain, bar)) {
        s2_.Commit(p);
        return 2;
      }
    }
    return 0;
  }

  void Solve(Oracle& oracle, const UnconstrainedSolver& solver) {
    s3_ = solver.Solve(oracle, detail::SortedIds(s1_.ids()));
  }

  void OfferTo(detail::BestOf& best) const {
    best.Offer(s1_.ids(), s1_.value());
    best.Offer(s2_.ids(), s2_.value());
    if (s3_) best.Offer(s3_->ids, s3_->value);
  }

  std::size_t resident() const {
    return s1_.size() + s2_.size() + (s3_ ? s3_->ids.size() : 0);
  }

 private:
  double v_;
  double tau_;
  std::size_t k_;
  CandidateSet s1_;
  CandidateSet s2_;
  std::optional<Solution> s3_;
};

namespace detail {

inline void CheckK(std::size_t k) {
  if (k < 1) throw ParameterError("cardinality bound k must be at least 1");
}

}  // namespace detail

// Known-OPT sieve: a single instance with the trusted guess v.
class KnownOptCardinalitySieve {
 public:
  KnownOptCardinalitySieve(Oracle& oracle, std::size_t k, double v,
                           SieveOptions options = {})
      : oracle_(oracle), k_(k), v_(v), options_(options) {
    detail::CheckK(k);
    if (!(v > 0.0)) throw ParameterError("guess v must be positive");
  }

  void Begin() {
    empty_value_ = oracle_.Evaluate(std::span<const ElementId>{});
    instance_.emplace(v_, options_.threshold.CardinalityFactor() * v_, k_,
                      empty_value_);
  }
  StepOutcome Process(ElementId u) {
    instance_->Process(oracle_, u);
    return {1, false};
  }
  std::size_t Resident() const { return instance_ ? instance_->resident() : 0; }
  Solution Finish() {
    instance_->Solve(oracle_, options_.solver);
    detail::BestOf best;
    instance_->OfferTo(best);
    return std::move(best).Take(empty_value_);
  }

  const CardinalityInstance& instance() const { return *instance_; }

 private:
  Oracle& oracle_;
  std::size_t k_;
  double v_;
  SieveOptions options_;
  double empty_value_ = 0.0;
  std::optional<CardinalityInstance> instance_;
};

// Guess-grid sieve. With a trusted max singleton value m the window is fixed
// at [m/(1+eps), k m] (or [m, k m] in tight grid mode). Without it, m is
// tracked over the stream and the window follows [m/(1+eps), 6 k m];
// guesses that fall below the window are deleted.
class GridCardinalitySieve {
 public:
  // Known-max variant.
  GridCardinalitySieve(Oracle& oracle, std::size_t k, double m, double epsilon,
                       SieveOptions options)
      : GridCardinalitySieve(oracle, k, epsilon, options, false) {
    if (!(m > 0.0)) throw ParameterError("max singleton value m must be positive");
    m_ = m;
  }

  // One-pass variant.
  static GridCardinalitySieve OnePass(Oracle& oracle, std::size_t k,
                                      double epsilon, SieveOptions options = {}) {
    return GridCardinalitySieve(oracle, k, epsilon, options, true);
  }

  void Begin() {
    empty_value_ = oracle_.Evaluate(std::span<const ElementId>{});
    if (!online_) SlideWindow(static_cast<double>(k_));
  }

  StepOutcome Process(ElementId u) {
    if (online_) {
      m_ = std::max(m_, oracle_.Singleton(u));
      SlideWindow(6.0 * static_cast<double>(k_));
    }
    for (auto& [exponent, instance] : grid_.live()) instance.Process(oracle_, u);
    return {grid_.size(), false};
  }

  std::size_t Resident() const {
    std::size_t total = 0;
    for (const auto& [exponent, instance] : grid_.live()) total += instance.resident();
    return total;
  }

  Solution Finish() {
    detail::BestOf best;
    for (auto& [exponent, instance] : grid_.live()) {
      instance.Solve(oracle_, options_.solver);
      instance.OfferTo(best);
    }
    return std::move(best).Take(empty_value_);
  }

  const GuessGrid<CardinalityInstance>& grid() const { return grid_; }
  double max_singleton() const { return m_; }

 private:
  GridCardinalitySieve(Oracle& oracle, std::size_t k, double epsilon,
                       SieveOptions options, bool online)
      : oracle_(oracle), k_(k), options_(options), online_(online), grid_(epsilon) {
    detail::CheckK(k);
    CheckEpsilon(epsilon);
  }

  void SlideWindow(double upper_factor) {
    const double lower =
        options_.grid == GridMode::kSafe ? m_ / grid_.base() : m_;
    const double c = options_.threshold.CardinalityFactor();
    grid_.Slide(lower, upper_factor * m_, [&](int, double v) {
      return CardinalityInstance(v, c * v, k_, empty_value_);
    });
  }

  Oracle& oracle_;
  std::size_t k_;
  SieveOptions options_;
  bool online_;
  GuessGrid<CardinalityInstance> grid_;
  double m_ = 0.0;
  double empty_value_ = 0.0;
};

// Largest number of live guesses the one-pass window can hold.
inline std::size_t CardinalityGridSizeBound(std::size_t k, double epsilon) {
  return static_cast<std::size_t>(
             std::ceil(std::log(6.0 * static_cast<double>(k)) / std::log1p(epsilon))) +
         2;
}

// Closed-form cap on peak_resident_elements for the grid sieves.
inline std::size_t CardinalityMemoryCap(std::size_t k, double epsilon) {
  return 3 * k * (CardinalityGridSizeBound(k, epsilon) + 1);
}

inline RunResult SieveCardKnownOpt(Oracle& oracle, std::span<const ElementId> stream,
                                   std::size_t k, double v, SieveOptions options = {}) {
  KnownOptCardinalitySieve alg(oracle, k, v, options);
  return StreamDrive(stream, alg, oracle);
}

inline RunResult SieveCardKnownMax(Oracle& oracle, std::span<const ElementId> stream,
                                   std::size_t k, double m, double epsilon,
                                   SieveOptions options = {}) {
  GridCardinalitySieve alg(oracle, k, m, epsilon, options);
  return StreamDrive(stream, alg, oracle);
}

inline RunResult SieveCardOnePass(Oracle& oracle, std::span<const ElementId> stream,
                                  std::size_t k, double epsilon, SieveOptions options = {}) {
  auto alg = GridCardinalitySieve::OnePass(oracle, k, epsilon, options);
  return StreamDrive(stream, alg, oracle);
}

}  // namespace subsieve
