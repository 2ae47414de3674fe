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
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "subsieve/errors.hpp"
#include "subsieve/oracle.hpp"

namespace subsieve {

// Counters collected by StreamDrive. All are non-decreasing during a run.
struct Instrumentation {
  std::uint64_t oracle_queries_total = 0;
  std::uint64_t oracle_queries_per_element_max = 0;
  std::uint64_t init_queries = 0;       // before the first element (f(empty))
  std::uint64_t element_queries = 0;    // sum over elements
  std::uint64_t post_pass_queries = 0;  // unconstrained solves after the pass
  std::uint64_t peak_resident_elements = 0;
  std::uint64_t live_instances_max = 0;
  // Elements whose query count exceeded 2 * live instances + 1.
  std::uint64_t query_bound_violations = 0;
  std::uint64_t passes = 0;
  std::uint64_t elements_seen = 0;
  bool early_terminated = false;
};

// What one element step did.
struct StepOutcome {
  std::size_t live_instances = 1;
  bool stop = false;  // early termination: the run is finished
};

struct Solution {
  std::vector<ElementId> ids;
  double value = 0.0;
};

struct RunResult {
  Solution solution;
  Instrumentation stats;
};

// A single-pass algorithm, driven one element at a time.
template <typename A>
concept StreamingAlgorithm = requires(A a, const A ca, ElementId u) {
  { a.Begin() } -> std::same_as<void>;
  { a.Process(u) } -> std::same_as<StepOutcome>;
  { ca.Resident() } -> std::convertible_to<std::size_t>;
  { a.Finish() } -> std::same_as<Solution>;
};

// Feeds `source` to `algorithm` in order, exactly once per element, and
// records instrumentation from the shared oracle's query counter. Throws
// StreamError if the source repeats an id.
template <StreamingAlgorithm A>
RunResult StreamDrive(std::span<const ElementId> source, A& algorithm,
                      const Oracle& oracle) {
  RunResult result;
  Instrumentation& s = result.stats;
  std::vector<bool> seen;
  auto note_resident = [&] {
    s.peak_resident_elements = std::max<std::uint64_t>(
        s.peak_resident_elements, algorithm.Resident());
  };

  const std::uint64_t start = oracle.query_count();
  algorithm.Begin();
  s.init_queries = oracle.query_count() - start;
  s.passes = 1;

  for (ElementId u : source) {
    if (u >= seen.size()) seen.resize(static_cast<std::size_t>(u) + 1, false);
    if (seen[u]) {
      throw StreamError("element " + std::to_string(u) +
                        " appears twice in the stream");
    }
    seen[u] = true;
    const std::uint64_t before = oracle.query_count();
    StepOutcome step = algorithm.Process(u);
    const std::uint64_t used = oracle.query_count() - before;
    ++s.elements_seen;
    s.element_queries += used;
    s.oracle_queries_per_element_max =
        std::max(s.oracle_queries_per_element_max, used);
    s.live_instances_max =
        std::max<std::uint64_t>(s.live_instances_max, step.live_instances);
    if (used > 2 * step.live_instances + 1) ++s.query_bound_violations;
    note_resident();
    if (step.stop) {
      s.early_terminated = true;
      break;
    }
  }

  const std::uint64_t before_finish = oracle.query_count();
  result.solution = algorithm.Finish();
  s.post_pass_queries = oracle.query_count() - before_finish;
  note_resident();
  s.oracle_queries_total = oracle.query_count() - start;
  return result;
}

}  // namespace subsieve
