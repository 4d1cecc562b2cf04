// Copyright 2026 The Authors.
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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gsemo::harness {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// Measured values behind the verdict.
  std::string detail;
  double seconds = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::vector<CriterionResult> criteria;

  bool passed() const;
};

/// Number of fixed seeds per statistical check and the number that must pass.
inline constexpr int kSuiteSeeds = 20;
inline constexpr int kSuiteRequired = 18;
/// Slack for comparing measured values against guarantee thresholds.
inline constexpr double kThresholdSlack = 1e-9;

/// core, theorem1..theorem4, lemmas, baselines, collapse, all.
std::vector<std::string_view> suiteNames();
/// Criterion ids run by a suite, in order. Throws ParseError for an unknown
/// name.
std::vector<int> suiteCriteria(std::string_view suite);

/// Runs one acceptance criterion (1..10) on the built-in instances.
CriterionResult runCriterion(int id);
SuiteReport runSuite(std::string_view suite);

/// "[PASS] 3 title: detail (1.2 s)".
std::string formatCriterion(const CriterionResult& c);

/// Budgets of the statistical checks.
std::uint64_t unconstrainedBudget(std::size_t n, double epsilon);
std::uint64_t constrainedBudget(std::size_t n, std::size_t k);

}  // namespace gsemo::harness
