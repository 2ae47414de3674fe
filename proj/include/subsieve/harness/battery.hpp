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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace subsieve::harness {

// Pass/fail/skip counts for one named property, with the worst observed
// ratio margin (smallest run_value / bound_value) where it applies.
struct CheckTally {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  std::optional<double> worst_margin;
  std::vector<std::string> failures;      // first few, for diagnosis
  std::map<std::string, std::uint64_t> skip_reasons;
};

class Battery {
 public:
  static constexpr std::size_t kMaxFailureNotes = 5;

  void Record(const std::string& check, bool pass, const std::string& detail = {},
              std::optional<double> margin = std::nullopt) {
    CheckTally& t = checks_[check];
    if (pass) {
      ++t.passed;
    } else {
      ++t.failed;
      if (t.failures.size() < kMaxFailureNotes) t.failures.push_back(detail);
    }
    if (margin) t.worst_margin = t.worst_margin ? std::min(*t.worst_margin, *margin) : *margin;
  }

  void Skip(const std::string& check, const std::string& reason) {
    CheckTally& t = checks_[check];
    ++t.skipped;
    ++t.skip_reasons[reason];
  }

  const CheckTally* Find(const std::string& check) const {
    auto it = checks_.find(check);
    return it == checks_.end() ? nullptr : &it->second;
  }

  std::uint64_t Passed(const std::string& check) const {
    const auto* t = Find(check);
    return t ? t->passed : 0;
  }

  std::uint64_t Failed(const std::string& check) const {
    const auto* t = Find(check);
    return t ? t->failed : 0;
  }

  bool ok() const {
    return std::all_of(checks_.begin(), checks_.end(),
                       [](const auto& kv) { return kv.second.failed == 0; });
  }

  const std::map<std::string, CheckTally>& checks() const { return checks_; }

  nlohmann::ordered_json Summary() const {
    nlohmann::ordered_json out;
    out["pass"] = ok();
    auto& list = out["checks"] = nlohmann::ordered_json::object();
    for (const auto& [name, t] : checks_) {
      nlohmann::ordered_json c;
      c["passed"] = t.passed;
      c["failed"] = t.failed;
      c["skipped"] = t.skipped;
      c["worst_margin"] = t.worst_margin ? nlohmann::ordered_json(*t.worst_margin)
                                         : nlohmann::ordered_json(nullptr);
      if (!t.failures.empty()) c["failures"] = t.failures;
      if (!t.skip_reasons.empty()) c["skip_reasons"] = t.skip_reasons;
      list[name] = std::move(c);
    }
    return out;
  }

 private:
  std::map<std::string, CheckTally> checks_;
};

}  // namespace subsieve::harness
