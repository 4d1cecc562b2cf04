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

#include "gsemo/objectives/set_function.hpp"

namespace gsemo::baselines {

struct LocalSearchConfig {
  double epsilon = 1.0;
  std::uint64_t maxSteps = 1'000'000;
};

struct LocalSearchResult {
  /// argmax{f(localOptimum), f(V \ localOptimum)}, evaluated.
  SubsetSolution solution;
  /// The (1 + eps/n^2)-approximate local optimum reached (or the last point
  /// when truncated), evaluated.
  SubsetSolution localOptimum;
  std::uint64_t steps = 0;
  /// maxSteps ran out before a local optimum was reached.
  bool truncated = false;
};

/// Approximate local search for unconstrained non-negative submodular
/// maximization.
///
/// Starts from the best singleton (lowest index on ties) and repeatedly
/// applies the single insertion or deletion with the largest value, provided
/// that value exceeds (1 + eps/n^2) f(x). Among equal values insertions win,
/// then lower indices.
LocalSearchResult approximateLocalSearch(const objectives::SetFunction& f,
                                         const LocalSearchConfig& config);

/// True when no insertion or deletion reaches a value > (1 + eps/n^2) f(x).
bool isApproximateLocalOptimum(const objectives::SetFunction& f, const SubsetSolution& x,
                               double epsilon);

}  // namespace gsemo::baselines
