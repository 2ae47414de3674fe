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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subsieve/candidate_set.hpp"
#include "subsieve/cardinality_sieve.hpp"
#include "subsieve/constraint.hpp"
#include "subsieve/errors.hpp"
#include "subsieve/grid.hpp"
#include "subsieve/oracle.hpp"
#include "subsieve/rational.hpp"
#include "subsieve/stream.hpp"
#include "subsieve/threshold.hpp"

namespace subsieve {

// A d-knapsack rescaled so every dimension has the same capacity b and every
// cost is at least 1. Feasible sets are unchanged by the rescaling.
struct StandardizedInstance {
  CostMatrix costs;
  Rational capacity;  // b = b' / c'
  Rational b_prime;   // max_i b_i
  Rational c_prime;   // min_{i,j} b' c_ij / b_i

  std::size_t dims() const { return costs.dims(); }
  std::size_t elements() const { return costs.elements(); }
  double capacity_value() const { return ToDouble(capacity); }

  DKnapsack AsConstraint() const {
    return DKnapsack{costs, std::vector<Rational>(dims(), capacity)};
  }
};

// c_ij -> b' c_ij / (b_i c'), b_i -> b' / c'. Requires 0 < c_ij <= b_i.
inline StandardizedInstance Standardize(const CostMatrix& costs,
                                        std::span<const Rational> caps) {
  const std::size_t d = costs.dims();
  const std::size_t n = costs.elements();
  if (d == 0) throw InputError("a d-knapsack needs at least one dimension");
  if (caps.size() != d) {
    throw InputError("expected " + std::to_string(d) + " capacities, got " +
                     std::to_string(caps.size()));
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (caps[i] <= 0) throw InputError("capacities must be positive");
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& c = costs.at(i, j);
      if (c <= 0 || c > caps[i]) {
        throw InputError("cost c[" + std::to_string(i) + "][" + std::to_string(j) +
                         "] = " + ToString(c) + " must lie in (0, " +
                         ToString(caps[i]) + "]");
      }
    }
  }
  StandardizedInstance out;
  out.b_prime = *std::max_element(caps.begin(), caps.end());
  std::optional<Rational> c_min;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational scaled = out.b_prime * costs.at(i, j) / caps[i];
      if (!c_min || scaled < *c_min) c_min = scaled;
    }
  }
  out.c_prime = c_min.value_or(Rational(1));
  out.capacity = out.b_prime / out.c_prime;
  out.costs = CostMatrix(d, n);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.costs.at(i, j) = out.b_prime * costs.at(i, j) / (caps[i] * out.c_prime);
    }
  }
  return out;
}

inline void CheckStandardized(const StandardizedInstance& inst) {
  for (std::size_t i = 0; i < inst.dims(); ++i) {
    for (std::size_t j = 0; j < inst.elements(); ++j) {
      const Rational& c = inst.costs.at(i, j);
      if (c < 1 || c > inst.capacity) {
        throw ContractError("instance is not standardized: cost " + ToString(c) +
                            " outside [1, " + ToString(inst.capacity) + "]");
      }
    }
  }
}

// Running max over elements and dimensions of f(u)/c_iu.
class DensityTracker {
 public:
  double Observe(double singleton_value, std::span<const double> costs) {
    for (double c : costs) m_ = std::max(m_, singleton_value / c);
    return m_;
  }
  double value() const { return m_; }

 private:
  double m_ = 0.0;
};

namespace detail {

struct ElementCosts {
  std::vector<Rational> exact;
  std::vector<double> approx;
};

inline ElementCosts CostsOf(const StandardizedInstance& inst, ElementId u) {
  if (u >= inst.elements()) {
    throw InputError("element " + std::to_string(u) + " has no cost column");
  }
  ElementCosts c{inst.costs.Column(u), {}};
  for (const Rational& r : c.exact) c.approx.push_back(ToDouble(r));
  return c;
}

}  // namespace detail

// Max density over a stream prefix; one singleton query per element.
inline double DensityMax(Oracle& oracle, const StandardizedInstance& inst,
                         std::span<const ElementId> prefix) {
  DensityTracker tracker;
  for (ElementId u : prefix) {
    tracker.Observe(oracle.Singleton(u), detail::CostsOf(inst, u).approx);
  }
  return tracker.value();
}

// One guess v for the d-knapsack sieve. Elements are admitted to S1, else S2,
// when their marginal density clears 2 tau / b in every dimension and the
// set stays within capacity. A big element (cost >= b/2 in some dimension
// with singleton density >= 2 tau / b) is reported to the caller and, in the
// grid sieves, kept as this guess's singleton candidate.
class KnapsackInstance {
 public:
  enum class Outcome { kRejected, kBig, kFirst, kSecond };

  KnapsackInstance(double v, double tau, const StandardizedInstance& inst,
                   double empty_value)
      : v_(v),
        tau_(tau),
        capacity_(&inst.capacity),
        density_bar_(2.0 * tau / inst.capacity_value()),
        s1_(empty_value, inst.dims()),
        s2_(empty_value, inst.dims()) {}

  double v() const { return v_; }
  double tau() const { return tau_; }
  double density_bar() const { return density_bar_; }
  const CandidateSet& s1() const { return s1_; }
  const CandidateSet& s2() const { return s2_; }
  const std::optional<Solution>& big() const { return big_; }
  const std::optional<Solution>& s3() const { return s3_; }

  Outcome Process(Oracle& oracle, ElementId u, double singleton_value,
                  const detail::ElementCosts& cost) {
    for (std::size_t i = 0; i < cost.exact.size(); ++i) {
      if (2 * cost.exact[i] >= *capacity_ &&
          ClearsThreshold(singleton_value, density_bar_ * cost.approx[i])) {
        big_ = Solution{{u}, singleton_value};
        return Outcome::kBig;
      }
    }
    if (TryAdmit(oracle, s1_, u, cost)) return Outcome::kFirst;
    if (TryAdmit(oracle, s2_, u, cost)) return Outcome::kSecond;
    return Outcome::kRejected;
  }

  void Solve(Oracle& oracle, const UnconstrainedSolver& solver) {
    s3_ = solver.Solve(oracle, detail::SortedIds(s1_.ids()));
  }

  void OfferTo(detail::BestOf& best) const {
    best.Offer(s1_.ids(), s1_.value());
    best.Offer(s2_.ids(), s2_.value());
    if (s3_) best.Offer(s3_->ids, s3_->value);
    if (big_) best.Offer(big_->ids, big_->value);
  }

  std::size_t resident() const {
    return s1_.size() + s2_.size() + (big_ ? 1 : 0) + (s3_ ? s3_->ids.size() : 0);
  }

 private:
  bool TryAdmit(Oracle& oracle, CandidateSet& set, ElementId u,
                const detail::ElementCosts& cost) {
    if (!set.Fits(cost.exact, *capacity_)) return false;
    Probe p = set.ProbeAdd(oracle, u);
    for (double c : cost.approx) {
      if (!ClearsThreshold(p.gain, density_bar_ * c)) return false;
    }
    set.Commit(p, cost.exact);
    return true;
  }

  double v_;
  double tau_;
  const Rational* capacity_;
  double density_bar_;
  CandidateSet s1_;
  CandidateSet s2_;
  std::optional<Solution> big_;
  std::optional<Solution> s3_;
};

// Known-OPT d-knapsack sieve: one guess; the first big element ends the run
// and is returned on its own.
class KnownOptKnapsackSieve {
 public:
  KnownOptKnapsackSieve(Oracle& oracle, const StandardizedInstance& inst,
                        double v, SieveOptions options = {})
      : oracle_(oracle), inst_(inst), v_(v), options_(options) {
    if (!(v > 0.0)) throw ParameterError("guess v must be positive");
    CheckStandardized(inst);
  }

  void Begin() {
    empty_value_ = oracle_.Evaluate(std::span<const ElementId>{});
    instance_.emplace(v_, options_.threshold.KnapsackFactor(inst_.dims()) * v_,
                      inst_, empty_value_);
  }

  StepOutcome Process(ElementId u) {
    const auto cost = detail::CostsOf(inst_, u);
    const double fu = oracle_.Singleton(u);
    if (instance_->Process(oracle_, u, fu, cost) == KnapsackInstance::Outcome::kBig) {
      early_ = Solution{{u}, fu};
      return {1, true};
    }
    return {1, false};
  }

  std::size_t Resident() const { return instance_ ? instance_->resident() : 0; }

  Solution Finish() {
    if (early_) return *early_;
    instance_->Solve(oracle_, options_.solver);
    detail::BestOf best;
    instance_->OfferTo(best);
    return std::move(best).Take(empty_value_);
  }

  const KnapsackInstance& instance() const { return *instance_; }
  bool early_returned() const { return early_.has_value(); }

 private:
  Oracle& oracle_;
  const StandardizedInstance& inst_;
  double v_;
  SieveOptions options_;
  double empty_value_ = 0.0;
  std::optional<KnapsackInstance> instance_;
  std::optional<Solution> early_;
};

// Guess-grid d-knapsack sieve. With a trusted max density m the window is
// fixed at [m/(1+eps), b m]; without it, m is tracked over the stream and the
// window follows [m/(1+eps), 2(d+1) b m]. Big elements overwrite the guess's
// singleton candidate and the pass continues.
class GridKnapsackSieve {
 public:
  // Known-density variant. m <= 0 means f vanishes on singletons; no guesses
  // are built and the output is the empty set.
  GridKnapsackSieve(Oracle& oracle, const StandardizedInstance& inst, double m,
                    double epsilon, SieveOptions options)
      : GridKnapsackSieve(oracle, inst, epsilon, options, false) {
    m_ = std::max(0.0, m);
  }

  static GridKnapsackSieve OnePass(Oracle& oracle, const StandardizedInstance& inst,
                                   double epsilon, SieveOptions options = {}) {
    return GridKnapsackSieve(oracle, inst, epsilon, options, true);
  }

  void Begin() {
    empty_value_ = oracle_.Evaluate(std::span<const ElementId>{});
    if (!online_) SlideWindow(inst_.capacity_value());
  }

  StepOutcome Process(ElementId u) {
    const auto cost = detail::CostsOf(inst_, u);
    const double fu = oracle_.Singleton(u);
    if (online_) {
      m_ = density_.Observe(fu, cost.approx);
      SlideWindow(2.0 * (static_cast<double>(inst_.dims()) + 1.0) *
                  inst_.capacity_value());
    }
    for (auto& [exponent, instance] : grid_.live()) {
      instance.Process(oracle_, u, fu, cost);
    }
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

  const GuessGrid<KnapsackInstance>& grid() const { return grid_; }
  double max_density() const { return m_; }

 private:
  GridKnapsackSieve(Oracle& oracle, const StandardizedInstance& inst,
                    double epsilon, SieveOptions options, bool online)
      : oracle_(oracle), inst_(inst), options_(options), online_(online), grid_(epsilon) {
    CheckEpsilon(epsilon);
    CheckStandardized(inst);
  }

  void SlideWindow(double upper_factor) {
    const double c = options_.threshold.KnapsackFactor(inst_.dims());
    grid_.Slide(m_ / grid_.base(), upper_factor * m_, [&](int, double v) {
      return KnapsackInstance(v, c * v, inst_, empty_value_);
    });
  }

  Oracle& oracle_;
  const StandardizedInstance& inst_;
  SieveOptions options_;
  bool online_;
  GuessGrid<KnapsackInstance> grid_;
  DensityTracker density_;
  double m_ = 0.0;
  double empty_value_ = 0.0;
};

inline std::size_t KnapsackGridSizeBound(double b, std::size_t d, double epsilon) {
  const double span = 2.0 * (static_cast<double>(d) + 1.0) * b * (1.0 + epsilon);
  return static_cast<std::size_t>(std::ceil(std::log(span) / std::log1p(epsilon))) + 2;
}

// Closed-form cap on peak_resident_elements for the grid sieves; each
// candidate set holds at most floor(b) elements since every cost is >= 1.
inline std::size_t KnapsackMemoryCap(double b, std::size_t d, double epsilon) {
  const auto per_set = static_cast<std::size_t>(std::floor(b));
  return (3 * per_set + 1) * (KnapsackGridSizeBound(b, d, epsilon) + 1);
}

inline RunResult SieveDkKnownOpt(Oracle& oracle, std::span<const ElementId> stream,
                                 const StandardizedInstance& inst, double v,
                                 SieveOptions options = {}) {
  KnownOptKnapsackSieve alg(oracle, inst, v, options);
  return StreamDrive(stream, alg, oracle);
}

inline RunResult SieveDkKnownDensity(Oracle& oracle, std::span<const ElementId> stream,
                                     const StandardizedInstance& inst, double m,
                                     double epsilon, SieveOptions options = {}) {
  GridKnapsackSieve alg(oracle, inst, m, epsilon, options);
  return StreamDrive(stream, alg, oracle);
}

inline RunResult SieveDkOnePass(Oracle& oracle, std::span<const ElementId> stream,
                                const StandardizedInstance& inst, double epsilon,
                                SieveOptions options = {}) {
  auto alg = GridKnapsackSieve::OnePass(oracle, inst, epsilon, options);
  return StreamDrive(stream, alg, oracle);
}

}  // namespace subsieve
