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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "subsieve/harness/bench.hpp"
#include "subsieve/harness/gen.hpp"
#include "subsieve/harness/run.hpp"
#include "subsieve/harness/verify.hpp"

namespace subsieve::harness {
namespace {

namespace fs = std::filesystem;

const std::string kData = SUBSIEVE_DATA_DIR;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("subsieve_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string File(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string GenText(const GenSpec& s) {
  std::ostringstream out;
  Generate(s, out);
  return out.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

RunConfig P3Config(Algorithm alg) {
  RunConfig c;
  c.algorithm = alg;
  c.oracle = "cut:" + kData + "/p3.graph";
  return c;
}

TEST(RunTest, OnePassOnPathMatchesOptimum) {
  RunConfig c = P3Config(Algorithm::kCardOnePass);
  c.k = 1;
  c.epsilon = 0.5;
  c.verify_exact = true;
  const Json r = harness::Run(c);
  EXPECT_EQ(r["output"]["ids"], Json::array({1}));
  EXPECT_DOUBLE_EQ(r["exact"]["ratio"].get<double>(), 1.0);
  EXPECT_TRUE(r["pass"].get<bool>());
  EXPECT_TRUE(r["checks"]["ratio"].get<bool>());
}

TEST(RunTest, KnownOptKnapsackReturnsBigElement) {
  RunConfig c = P3Config(Algorithm::kDkOpt);
  c.costs = kData + "/p3.costs";
  c.caps = "4";
  c.v = "2";
  const Json r = harness::Run(c);
  EXPECT_TRUE(r["early_termination"].get<bool>());
  EXPECT_DOUBLE_EQ(r["output"]["value"].get<double>(), 2.0);
  EXPECT_EQ(r["output"]["ids"], Json::array({1}));
  EXPECT_EQ(r["instrumentation"]["elements_seen"], 2);
  EXPECT_TRUE(r["checks"]["single_pass"].get<bool>());
}

TEST(RunTest, OptGuessUsesExactValue) {
  RunConfig c = P3Config(Algorithm::kCardOpt);
  c.k = 1;
  c.v = "opt";
  const Json r = harness::Run(c);
  EXPECT_DOUBLE_EQ(r["trusted_input"]["v"].get<double>(), 2.0);
  EXPECT_DOUBLE_EQ(r["output"]["value"].get<double>(), 2.0);
  EXPECT_FALSE(r["exact"].is_null());
}

TEST(RunTest, AutoDensityMatchesHandValue) {
  RunConfig c = P3Config(Algorithm::kDkDensity);
  c.costs = kData + "/p3.costs";
  c.caps = "4";
  c.m = "auto";
  c.epsilon = 0.5;
  c.verify_exact = true;
  const Json r = harness::Run(c);
  EXPECT_DOUBLE_EQ(r["trusted_input"]["m"].get<double>(), 1.0);
  EXPECT_TRUE(r["pass"].get<bool>());
}

TEST(RunTest, ReportIsReproducibleWithoutTiming) {
  RunConfig c = P3Config(Algorithm::kCardOnePass);
  c.k = 2;
  c.shuffle = true;
  c.seed = 11;
  c.verify_exact = true;
  const Json a = harness::Run(c);
  const Json b = harness::Run(c);
  EXPECT_EQ(StableDump(a), StableDump(b));
  EXPECT_EQ(a.back().is_number(), true);
  EXPECT_EQ(std::prev(a.end()).key(), "wall_time_ms");
}

TEST(RunTest, MalformedGraphNamesTheLine) {
  RunConfig c;
  c.oracle = "cut:" + kData + "/malformed.graph";
  c.k = 1;
  try {
    harness::Run(c);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(RunTest, MissingInputsAreParameterErrors) {
  RunConfig c = P3Config(Algorithm::kDkOnePass);
  EXPECT_THROW(harness::Run(c), ParameterError);  // no costs
  RunConfig card = P3Config(Algorithm::kCardOpt);
  card.k = 1;
  EXPECT_THROW(harness::Run(card), ParameterError);  // no v
  card.v = "-3";
  EXPECT_THROW(harness::Run(card), ParameterError);
  RunConfig bad = P3Config(Algorithm::kCardOnePass);
  bad.k = 1;
  bad.epsilon = 0.0;
  EXPECT_THROW(harness::Run(bad), ParameterError);
  bad.oracle = "graph:" + kData + "/p3.graph";
  EXPECT_THROW(harness::Run(bad), ParameterError);
}

TEST(RunTest, CostColumnMismatchIsInputError) {
  TempDir dir;
  WriteFile(dir.File("c"), "1 2\n1 1\n");
  RunConfig c = P3Config(Algorithm::kDkOnePass);
  c.costs = dir.File("c");
  c.caps = "4";
  EXPECT_THROW(harness::Run(c), InputError);
}

TEST(GenTest, SameSeedSameBytes) {
  GenSpec s;
  s.kind = "cut";
  s.n = 8;
  s.seed = 7;
  EXPECT_EQ(GenText(s), GenText(s));
  GenSpec other = s;
  other.seed = 8;
  EXPECT_NE(GenText(s), GenText(other));
}

TEST(GenTest, CostEntriesWithinCapacity) {
  GenSpec s;
  s.kind = "costs";
  s.n = 8;
  s.costs.dims = 2;
  s.costs.capacity = 5;
  std::istringstream in(GenText(s));
  const CostMatrix c = io::ReadCosts(in);
  ASSERT_EQ(c.dims(), 2u);
  ASSERT_EQ(c.elements(), 8u);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      EXPECT_GE(c.at(i, j), 1);
      EXPECT_LE(c.at(i, j), 5);
    }
  }
}

TEST(GenTest, EmptyCutInstanceLoads) {
  GenSpec s;
  s.n = 0;
  std::istringstream in(GenText(s));
  EXPECT_EQ(io::ReadGraph(in).GroundSize(), 0u);
}

TEST(GenTest, EveryKindRoundTrips) {
  for (const char* kind : {"family", "table"}) {
    GenSpec s;
    s.kind = kind;
    s.n = 5;
    s.seed = 3;
    std::istringstream in(GenText(s));
    if (s.kind == "family") {
      EXPECT_EQ(io::ReadFamily(in).GroundSize(), 5u);
    } else {
      EXPECT_EQ(io::ReadTable(in).GroundSize(), 5u);
    }
  }
  GenSpec bad;
  bad.kind = "graph";
  EXPECT_THROW(GenText(bad), ParameterError);
  bad.kind = "cut";
  bad.graph.edge_probability = 1.5;
  EXPECT_THROW(GenText(bad), ParameterError);
}

std::vector<std::vector<std::string>> Rows(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::size_t Column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  ADD_FAILURE() << "no column " << name;
  return 0;
}

TEST(BenchTest, EmptySweepIsHeaderOnly) {
  BenchSpec s;
  s.epsilons.clear();
  std::ostringstream out;
  Bench(s, out);
  EXPECT_EQ(out.str(), std::string(kBenchHeader) + "\n");
  BenchSpec no_seeds;
  no_seeds.seeds.clear();
  std::ostringstream out2;
  Bench(no_seeds, out2);
  EXPECT_EQ(out2.str(), std::string(kBenchHeader) + "\n");
}

TEST(BenchTest, SingleCellReproducesRun) {
  TempDir dir;
  BenchSpec s;
  s.algorithms = {Algorithm::kDkOnePass};
  s.n = 9;
  s.seeds = {5};
  s.ds = {2};
  s.bs = {3};
  s.epsilons = {0.2};
  std::ostringstream out;
  Bench(s, out);
  const auto rows = Rows(out.str());
  ASSERT_EQ(rows.size(), 2u);

  GenSpec g;
  g.n = 9;
  g.seed = 5;
  WriteFile(dir.File("g"), GenText(g));
  g.kind = "costs";
  g.costs = {2, 3, s.max_denominator};
  WriteFile(dir.File("c"), GenText(g));
  RunConfig c;
  c.algorithm = Algorithm::kDkOnePass;
  c.oracle = "cut:" + dir.File("g");
  c.costs = dir.File("c");
  c.caps = "3,3";
  c.epsilon = 0.2;
  c.seed = 5;
  c.verify_exact = true;
  const Json r = harness::Run(c);

  const auto& h = rows[0];
  const auto& row = rows[1];
  EXPECT_EQ(row[Column(h, "value")], io::detail::Num(r["output"]["value"].get<double>()));
  EXPECT_EQ(row[Column(h, "opt")], io::detail::Num(r["exact"]["opt_value"].get<double>()));
  EXPECT_EQ(row[Column(h, "oracle_queries_total")],
            r["instrumentation"]["oracle_queries_total"].dump());
  EXPECT_EQ(row[Column(h, "peak_resident_elements")],
            r["instrumentation"]["peak_resident_elements"].dump());
  EXPECT_EQ(row[Column(h, "pass")], "true");
}

TEST(BenchTest, PeakMemoryGrowsAsEpsilonShrinks) {
  BenchSpec s;
  s.n = 60;
  s.seeds = {2};
  s.ks = {4};
  s.epsilons = {0.5, 0.2, 0.1};
  s.verify_exact = false;
  std::ostringstream out;
  Bench(s, out);
  const auto rows = Rows(out.str());
  ASSERT_EQ(rows.size(), 4u);
  const std::size_t col = Column(rows[0], "peak_resident_elements");
  EXPECT_LE(std::stoull(rows[1][col]), std::stoull(rows[2][col]));
  EXPECT_LE(std::stoull(rows[2][col]), std::stoull(rows[3][col]));
}

TEST(BenchTest, BaselineColumnsAppear) {
  BenchSpec s;
  s.n = 8;
  s.rdg_seeds = 5;
  std::ostringstream out;
  Bench(s, out);
  const auto rows = Rows(out.str());
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].back(), "rdg_ratio_mean");
  EXPECT_EQ(rows[1].size(), rows[0].size());
  EXPECT_FALSE(rows[1][Column(rows[0], "rdg_value_mean")].empty());
}

TEST(VerifyTest, EmptySeedListPassesTrivially) {
  BatteryOptions o;
  o.seeds = 0;
  Battery battery;
  RunSuite(battery, "all", o);
  EXPECT_TRUE(battery.ok());
  EXPECT_TRUE(battery.checks().empty());
  EXPECT_TRUE(battery.Summary()["pass"].get<bool>());
}

TEST(VerifyTest, SmallBatteriesPass) {
  BatteryOptions o;
  o.seeds = 12;
  o.n_max = 8;
  o.rdg_seeds = 50;
  for (const char* suite : {"cardinality", "knapsack", "standardize", "unconstrained"}) {
    Battery battery;
    RunSuite(battery, suite, o);
    EXPECT_TRUE(battery.ok()) << suite << ": " << battery.Summary().dump(2);
    EXPECT_FALSE(battery.checks().empty()) << suite;
  }
}

TEST(VerifyTest, UnknownSuiteRejected) {
  Battery battery;
  EXPECT_THROW(RunSuite(battery, "matroid", {}), ParameterError);
}

TEST(VerifyTest, BatteryRecordsFailuresAndSkips) {
  Battery battery;
  battery.Record("x", true, "", 0.5);
  battery.Record("x", false, "bad case", 0.25);
  battery.Skip("y", "no OPT");
  EXPECT_FALSE(battery.ok());
  const Json s = battery.Summary();
  EXPECT_EQ(s["checks"]["x"]["passed"], 1);
  EXPECT_EQ(s["checks"]["x"]["failed"], 1);
  EXPECT_DOUBLE_EQ(s["checks"]["x"]["worst_margin"].get<double>(), 0.25);
  EXPECT_EQ(s["checks"]["x"]["failures"][0], "bad case");
  EXPECT_EQ(s["checks"]["y"]["skipped"], 1);
}

}  // namespace
}  // namespace subsieve::harness
