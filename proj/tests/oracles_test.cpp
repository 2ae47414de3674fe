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

#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "subsieve/oracles/coverage.hpp"
#include "subsieve/oracles/cut.hpp"
#include "subsieve/oracles/generators.hpp"
#include "subsieve/oracles/io.hpp"
#include "subsieve/oracles/table.hpp"

namespace subsieve {
namespace {

using testing::kA;
using testing::kB;
using testing::kC;

// Independent cut evaluation from a dense adjacency matrix.
double AdjacencyCut(const CutOracle& g, std::uint64_t mask) {
  const std::size_t n = g.GroundSize();
  std::vector<double> w(n * n, 0.0);
  for (const Edge& e : g.edges()) {
    w[e.u * n + e.v] += e.w;
    if (!g.directed()) w[e.v * n + e.u] += e.w;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> i & 1) && !(mask >> j & 1)) total += w[i * n + j];
    }
  }
  return total;
}

TEST(CutValue, P3HandValues) {
  auto g = testing::P3();
  EXPECT_EQ(CutValue(g, {}), 0.0);
  const ElementId b[] = {kB};
  EXPECT_EQ(CutValue(g, b), 2.0);
  const ElementId all[] = {kA, kB, kC};
  EXPECT_EQ(CutValue(g, all), 0.0);
  const std::vector<double> expected = {0, 1, 2, 1, 1, 2, 1, 0};
  EXPECT_EQ(Tabulate(g).values(), expected);
}

TEST(CutValue, OutOfRangeVertex) {
  auto g = testing::P3();
  const ElementId bad[] = {3};
  EXPECT_THROW(CutValue(g, bad), InputError);
}

TEST(CutValue, MatchesAdjacencyMatrix) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    gen::GraphParams p;
    p.directed = seed % 2 == 1;
    auto g = gen::RandomCutGraph(7, seed, p);
    auto table = Tabulate(g);
    for (std::uint64_t mask = 0; mask < 128; ++mask) {
      ASSERT_NEAR(table.at(mask), AdjacencyCut(g, mask), 1e-9);
    }
  }
}

TEST(CutValue, UndirectedSymmetryExhaustive) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto table = Tabulate(gen::RandomCutGraph(12, seed));
    const std::uint32_t full = (1u << 12) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      ASSERT_DOUBLE_EQ(table.at(mask), table.at(full ^ mask));
    }
  }
}

TEST(CoverageValue, SmallFamily) {
  // items 1,2,3 live in a universe of 4 (item 0 unused)
  CoverageOracle c({1, 1, 1, 1}, {{1, 2}, {2, 3}});
  const ElementId a[] = {0};
  const ElementId ab[] = {0, 1};
  EXPECT_EQ(CoverageValue(c, a), 2.0);
  EXPECT_EQ(CoverageValue(c, ab), 3.0);
  EXPECT_EQ(CoverageValue(c, {}), 0.0);
}

TEST(CoverageValue, ItemOutOfRange) {
  EXPECT_THROW(CoverageOracle({1.0}, {{0, 1}}), InputError);
}

TEST(CoverageValue, MonotoneExhaustive) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto table = Tabulate(gen::RandomFamily(10, seed));
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
      for (int u = 0; u < 10; ++u) {
        ASSERT_GE(table.at(mask | (1u << u)), table.at(mask));
      }
    }
  }
}

TEST(ValidateSubmodular, P3CutTable) {
  EXPECT_TRUE(ValidateSubmodular(Tabulate(testing::P3())));
}

TEST(ValidateSubmodular, ModularTable) {
  EXPECT_TRUE(ValidateSubmodular(testing::ModularTable(4)));
}

TEST(ValidateSubmodular, SupermodularWitness) {
  auto check = ValidateSubmodular(TableOracle(2, {0, 0, 0, 1}));
  ASSERT_FALSE(check);
  EXPECT_EQ(check.witness->set, 0u);
  EXPECT_EQ(check.witness->u, 0u);
  EXPECT_EQ(check.witness->v, 1u);
}

TEST(ValidateSubmodular, NegativeValueRejected) {
  EXPECT_FALSE(ValidateSubmodular(TableOracle(1, {0, -1})));
}

TEST(ValidateSubmodular, StructuredOraclesOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 6 + seed % 7;
    gen::GraphParams gp;
    gp.directed = seed % 3 == 0;
    ASSERT_TRUE(ValidateSubmodular(Tabulate(gen::RandomCutGraph(n, seed, gp))));
    ASSERT_TRUE(ValidateSubmodular(Tabulate(gen::RandomFamily(n, seed))));
    ASSERT_TRUE(ValidateSubmodular(gen::RandomSubmodularTable(n, seed, seed % 4)));
  }
}

TEST(LoadGraph, ParsesHeaderAndEdges) {
  std::istringstream in("3 2 undirected\n0 1 1\n1 2 1.5\n");
  auto g = io::ReadGraph(in);
  EXPECT_EQ(g.GroundSize(), 3u);
  EXPECT_EQ(g.edges().size(), 2u);
  const ElementId b[] = {1};
  EXPECT_DOUBLE_EQ(g.Evaluate(b), 2.5);
}

TEST(LoadGraph, EmptyEdgeListIsZeroFunction) {
  std::istringstream in("4 0 directed\n");
  auto table = Tabulate(io::ReadGraph(in));
  for (double v : table.values()) EXPECT_EQ(v, 0.0);
}

TEST(LoadGraph, ErrorsCarryLineNumbers) {
  std::istringstream bad_weight("3 2 undirected\n0 1 1\n1 2 x\n");
  try {
    io::ReadGraph(bad_weight);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::istringstream negative("2 1 undirected\n0 1 -2\n");
  EXPECT_THROW(io::ReadGraph(negative), ParseError);
  std::istringstream short_file("3 2 undirected\n0 1 1\n");
  EXPECT_THROW(io::ReadGraph(short_file), ParseError);
  std::istringstream kind("3 0 sideways\n");
  EXPECT_THROW(io::ReadGraph(kind), ParseError);
}

TEST(LoadFamily, ParsesWeightsAndSets) {
  std::istringstream in("4 3\n1 2 3 4\n0 1\n\n3\n");
  auto c = io::ReadFamily(in);
  EXPECT_EQ(c.GroundSize(), 3u);
  const ElementId all[] = {0, 1, 2};
  EXPECT_DOUBLE_EQ(c.Evaluate(all), 1 + 2 + 4);
}

TEST(LoadTable, RejectsNonSubmodularTable) {
  std::istringstream in("2\n0 0\n1 0\n2 0\n3 1\n");
  try {
    io::ReadTable(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("witness"), std::string::npos);
  }
}

TEST(LoadTable, DuplicateMask) {
  std::istringstream in("1\n0 0\n0 1\n");
  EXPECT_THROW(io::ReadTable(in), ParseError);
}

TEST(LoadCosts, RationalEntries) {
  std::istringstream in("2 2\n2 4\n1/3 3\n");
  auto c = io::ReadCosts(in);
  EXPECT_EQ(c.at(1, 0), Rational(1, 3));
  std::istringstream bad("1 2\n1 2/0\n");
  EXPECT_THROW(io::ReadCosts(bad), ParseError);
}

TEST(ParseCapacities, CommaAndSpace) {
  auto caps = io::ParseCapacities("10,5/2 3.25");
  ASSERT_EQ(caps.size(), 3u);
  EXPECT_EQ(caps[1], Rational(5, 2));
  EXPECT_EQ(caps[2], Rational(13, 4));
}

// Writing then reading any generated instance reproduces it exactly.
TEST(InstanceFiles, RoundTripPreservesValues) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = gen::RandomCutGraph(8, seed);
    std::stringstream gs;
    io::WriteGraph(gs, g);
    EXPECT_EQ(Tabulate(io::ReadGraph(gs)).values(), Tabulate(g).values());

    auto fam = gen::RandomFamily(8, seed);
    std::stringstream fs;
    io::WriteFamily(fs, fam);
    EXPECT_EQ(Tabulate(io::ReadFamily(fs)).values(), Tabulate(fam).values());

    auto t = gen::RandomSubmodularTable(6, seed);
    std::stringstream ts;
    io::WriteTable(ts, t);
    EXPECT_EQ(io::ReadTable(ts).values(), t.values());

    auto c = gen::RandomCosts(8, seed, {3, 5, 4});
    std::stringstream cs;
    io::WriteCosts(cs, c);
    EXPECT_EQ(io::ReadCosts(cs), c);
  }
}

TEST(Generators, SeededDeterminism) {
  std::stringstream a, b;
  io::WriteGraph(a, gen::RandomCutGraph(8, 7));
  io::WriteGraph(b, gen::RandomCutGraph(8, 7));
  EXPECT_EQ(a.str(), b.str());
}

TEST(Generators, CostsInRange) {
  auto c = gen::RandomCosts(8, 1, {2, 5, 4});
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      EXPECT_GE(c.at(i, j), 1);
      EXPECT_LE(c.at(i, j), 5);
    }
  }
}

}  // namespace
}  // namespace subsieve
