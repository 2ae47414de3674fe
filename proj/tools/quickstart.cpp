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

// Minimal library use: one-pass cardinality sieve over a random cut graph.

#include <iostream>

#include "subsieve/cardinality_sieve.hpp"
#include "subsieve/oracles/generators.hpp"

int main() {
  using namespace subsieve;
  const CutOracle graph = gen::RandomCutGraph(200, /*seed=*/42);
  Oracle oracle(graph);
  const auto stream = gen::StreamOrder(graph.GroundSize(), true, 7);

  SieveOptions options;
  options.solver.kind = SolverKind::kDoubleGreedy;
  const RunResult r = SieveCardOnePass(oracle, stream, /*k=*/10, /*epsilon=*/0.2, options);

  std::cout << "picked " << r.solution.ids.size() << " vertices, cut value "
            << r.solution.value << '\n'
            << "queries " << r.stats.oracle_queries_total << ", peak memory "
            << r.stats.peak_resident_elements << " ids across at most "
            << r.stats.live_instances_max << " guesses\n";
}
