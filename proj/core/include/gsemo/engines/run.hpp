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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gsemo/core/archive.hpp"
#include "gsemo/core/subset.hpp"

namespace gsemo::engines {

struct RunConfig {
  std::uint64_t seed = 0;
  std::uint64_t maxIterations = 1000;
  SizeBound constraintK = kUnbounded;
  std::uint64_t recordTraceEvery = 1000;
  /// Stop as soon as the best feasible value reaches this target.
  std::optional<double> targetValue;

  /// Throws GuardError when a field is out of range for ground set size n.
  void validate(std::size_t n) const;
};

struct TraceRecord {
  std::uint64_t iteration = 0;
  /// Best value among solutions of size <= k; empty while none exists.
  std::optional<double> bestFeasibleValue;
  std::size_t archiveOccupancy = 0;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct RunResult {
  std::string engine;
  std::string generator;
  std::uint64_t seed = 0;
  SubsetSolution best;
  double bestValue = 0.0;
  std::uint64_t oracleCalls = 0;
  std::uint64_t iterations = 0;
  std::vector<TraceRecord> trace;
  /// Size-indexed values of the final population (a single entry for the
  /// (1+1)-EA, at the size of its current solution).
  std::vector<std::optional<double>> finalArchive;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Called after every GSEMO iteration with the iteration number and the
/// updated population; lets tests check invariants step by step.
using ArchiveObserver = std::function<void(std::uint64_t, const ParetoArchive&)>;

}  // namespace gsemo::engines
