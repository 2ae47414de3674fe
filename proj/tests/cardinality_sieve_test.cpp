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

#include <gtest/gtest.h>

#include <vector>

#include "fixtures.hpp"
#include "subsieve/cardinality_sieve.hpp"
#include "subsieve/exact.hpp"
#include "subsieve/oracles/generators.hpp"

namespace subsieve {
namespace {

using testing::kA;
using testing::kB;
using testing::kC;

const std::vector<ElementId> kP3Stream = {kA, kB, kC};

std::vector<int> LiveExponents(const GuessGrid<CardinalityInstance>& grid) {
  std::vector<int> out;
  for (const auto& [i, inst] : grid.live()) out.push_back(i);
  return out;
}

TEST(KnownOptSieve, P3Trace) {
  auto f = testing::P3();
  Oracle oracle(f);
  KnownOptCardinalitySieve alg(oracle, 1, 2.0);
  auto r = StreamDrive(kP3Stream, alg, oracle);
  EXPECT_EQ(alg.instance().s1().ids(), (std::vector<ElementId>{kA}));
  EXPECT_EQ(alg.instance().s2().ids(), (std::vector<ElementId>{kB}));
  EXPECT_EQ(r.solution.ids, (std::vector<ElementId>{kB}));
  EXPECT_EQ(r.solution.value, 2.0);
  EXPECT_EQ(r.stats.elements_seen, 3u);
  EXPECT_EQ(r.stats.passes, 1u);
}

TEST(KnownOptSieve, EmptyStream) {
  TableOracle t(2, {0.5, 1, 1, 1.5});
  Oracle oracle(t);
  auto r = SieveCardKnownOpt(oracle, {}, 2, 1.0);
  EXPECT_TRUE(r.solution.ids.empty());
  EXPECT_EQ(r.solution.value, 0.5);
}

TEST(KnownOptSieve, HugeGuessRejectsEverything) {
  auto f = testing::P3();
  Oracle oracle(f);
  KnownOptCardinalitySieve alg(oracle, 2, 1000.0);
  auto r = StreamDrive(kP3Stream, alg, oracle);
  EXPECT_TRUE(alg.instance().s1().empty());
  EXPECT_TRUE(alg.instance().s2().empty());
  EXPECT_TRUE(r.solution.ids.empty());
}

TEST(KnownOptSieve, ParameterErrors) {
  auto f = testing::P3();
  Oracle oracle(f);
  EXPECT_THROW(KnownOptCardinalitySieve(oracle, 1, 0.0), ParameterError);
  EXPECT_THROW(KnownOptCardinalitySieve(oracle, 0, 1.0), ParameterError);
}

TEST(KnownMaxSieve, GridEnumeration) {
  auto t = testing::ModularTable(1);
  for (auto mode : {GridMode::kTight, GridMode::kSafe}) {
    Oracle oracle(t);
    SieveOptions opt;
    opt.grid = mode;
    GridCardinalitySieve alg(oracle, 4, 1.0, 1.0, opt);
    alg.Begin();
    std::vector<int> expected = {0, 1, 2};
    if (mode == GridMode::kSafe) expected.insert(expected.begin(), -1);
    EXPECT_EQ(LiveExponents(alg.grid()), expected);
  }
}

TEST(KnownMaxSieve, P3SafeGridFindsOptimumTightGridIsEmpty) {
  auto f = testing::P3();
  {
    Oracle oracle(f);
    GridCardinalitySieve alg(oracle, 1, 2.0, 0.5, {});
    auto r = StreamDrive(kP3Stream, alg, oracle);
    // Only v = 1.5 lies in [2/1.5, 2].
    EXPECT_EQ(LiveExponents(alg.grid()), std::vector<int>{1});
    EXPECT_EQ(r.solution.ids, (std::vector<ElementId>{kB}));
    EXPECT_EQ(r.solution.value, 2.0);
  }
  {
    Oracle oracle(f);
    SieveOptions opt;
    opt.grid = GridMode::kTight;
    GridCardinalitySieve alg(oracle, 1, 2.0, 0.5, opt);
    auto r = StreamDrive(kP3Stream, alg, oracle);
    EXPECT_EQ(alg.grid().size(), 0u);
    EXPECT_EQ(r.solution.value, 0.0);
  }
}

TEST(KnownMaxSieve, SingleElementStream) {
  TableOracle t(1, {0.0, 3.0});
  Oracle oracle(t);
  const ElementId stream[] = {0};
  auto r = SieveCardKnownMax(oracle, stream, 3, 3.0, 0.2);
  EXPECT_EQ(r.solution.ids, std::vector<ElementId>{0});
}

TEST(KnownMaxSieve, RejectsNonPositiveMax) {
  auto f = testing::P3();
  Oracle oracle(f);
  EXPECT_THROW(SieveCardKnownMax(oracle, kP3Stream, 1, 0.0, 0.5), ParameterError);
}

TEST(OnePassSieve, WindowFollowsRunningMax) {
  TableOracle t(2, {0, 1, 3, 4});
  Oracle oracle(t);
  SieveOptions opt;
  opt.grid = GridMode::kTight;
  auto alg = GridCardinalitySieve::OnePass(oracle, 2, 1.0, opt);
  alg.Begin();
  alg.Process(0);
  EXPECT_EQ(LiveExponents(alg.grid()), (std::vector<int>{0, 1, 2, 3}));
  alg.Process(1);
  EXPECT_EQ(LiveExponents(alg.grid()), (std::vector<int>{2, 3, 4, 5}));
}

TEST(OnePassSieve, P3ReachesOptimum) {
  auto f = testing::P3();
  for (auto mode : {GridMode::kSafe, GridMode::kTight}) {
    Oracle oracle(f);
    SieveOptions opt;
    opt.grid = mode;
    auto r = SieveCardOnePass(oracle, kP3Stream, 1, 1.0, opt);
    EXPECT_EQ(r.solution.value, 2.0);
    EXPECT_EQ(r.solution.ids, (std::vector<ElementId>{kB}));
  }
}

TEST(OnePassSieve, AllZeroFunction) {
  TableOracle zero(3, std::vector<double>(8, 0.0));
  Oracle oracle(zero);
  auto r = SieveCardOnePass(oracle, kP3Stream, 2, 0.3);
  EXPECT_TRUE(r.solution.ids.empty());
  EXPECT_EQ(r.solution.value, 0.0);
  EXPECT_EQ(r.stats.live_instances_max, 0u);
}

TEST(OnePassSieve, DeterministicCounters) {
  auto g = gen::RandomCutGraph(30, 8);
  auto order = gen::StreamOrder(30, true, 2);
  Oracle o1(g), o2(g);
  auto a = SieveCardOnePass(o1, order, 4, 0.1);
  auto b = SieveCardOnePass(o2, order, 4, 0.1);
  EXPECT_EQ(a.solution.ids, b.solution.ids);
  EXPECT_EQ(a.solution.value, b.solution.value);
  EXPECT_EQ(a.stats.oracle_queries_total, b.stats.oracle_queries_total);
  EXPECT_EQ(a.stats.peak_resident_elements, b.stats.peak_resident_elements);
}

// Small-scale version of the ratio, memory and query properties.
TEST(OnePassSieve, RatioMemoryQueriesOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 6 + seed % 5;
    const std::size_t k = 1 + seed % 4;
    auto g = gen::RandomCutGraph(n, seed);
    Oracle exact_oracle(g);
    const double opt = ExactOpt(exact_oracle, Cardinality{k}, n).opt_value;
    Oracle oracle(g);
    auto r = SieveCardOnePass(oracle, gen::StreamOrder(n, true, seed), k, 0.1);
    ASSERT_LE(r.solution.ids.size(), k);
    ASSERT_GE(r.solution.value, (1.0 / 6.0 - 0.1) * opt - 1e-9);
    ASSERT_LE(r.stats.peak_resident_elements, CardinalityMemoryCap(k, 0.1));
    ASSERT_EQ(r.stats.query_bound_violations, 0u);
  }
}

TEST(Threshold, GeneralizedReducesToClassicAtHalf) {
  ThresholdRule gen{ThresholdMode::kGeneralized, 0.5};
  ThresholdRule classic;
  EXPECT_DOUBLE_EQ(gen.CardinalityFactor(), classic.CardinalityFactor());
  for (std::size_t d = 1; d <= 4; ++d) {
    EXPECT_DOUBLE_EQ(gen.KnapsackFactor(d), classic.KnapsackFactor(d));
    EXPECT_DOUBLE_EQ(KnapsackGuarantee(classic.KnapsackFactor(d), 0.5, d),
                     classic.KnapsackFactor(d));
  }
  EXPECT_DOUBLE_EQ(CardinalityGuarantee(1.0 / 6.0, 0.5), 1.0 / 6.0);
}

// Retuned tau balances both cases, so the certified factor equals tau/v.
TEST(Threshold, GeneralizedFactorIsBalanced) {
  for (double gamma : {1.0 / 3.0, 0.5, 0.75, 1.0}) {
    ThresholdRule rule{ThresholdMode::kGeneralized, gamma};
    const double c = rule.CardinalityFactor();
    EXPECT_NEAR(CardinalityGuarantee(c, gamma), c, 1e-15);
    EXPECT_NEAR(gamma * (1 - 2 * c) / (2 * gamma + 1), c, 1e-15);
    for (std::size_t d = 1; d <= 3; ++d) {
      const double cd = rule.KnapsackFactor(d);
      EXPECT_NEAR(gamma * (1 - 4 * d * cd) / (2 * gamma + 1), cd, 1e-15);
    }
  }
}

TEST(Grid, ExponentsWithinGuardBand) {
  auto r = ExponentsWithin(1.0, 4.0, 2.0);
  EXPECT_EQ(r.lo, 0);
  EXPECT_EQ(r.hi, 2);
  EXPECT_TRUE(ExponentsWithin(0.0, 0.0, 2.0).empty());
  auto tight = ExponentsWithin(1.0 / 1.1, 1.1 * 1.1, 1.1);
  EXPECT_EQ(tight.lo, -1);
  EXPECT_EQ(tight.hi, 2);
}

TEST(Grid, DeletedExponentsStayDeleted) {
  GuessGrid<int> grid(1.0);
  auto make = [](int i, double) { return i; };
  grid.Slide(1.0, 8.0, make);
  grid.Slide(4.0, 8.0, make);
  grid.Slide(1.0, 16.0, make);  // lower end moving back is ignored for 0,1
  std::vector<int> keys;
  for (auto& [i, v] : grid.live()) keys.push_back(i);
  EXPECT_EQ(keys, (std::vector<int>{2, 3, 4}));
}

}  // namespace
}  // namespace subsieve
