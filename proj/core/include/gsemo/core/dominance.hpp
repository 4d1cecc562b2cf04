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

#include <cstddef>

#include "gsemo/core/subset.hpp"

namespace gsemo {

/// Bi-objective image of a solution: (f(x), -|x|), both maximized.
struct ObjectiveVector {
  double value = 0.0;
  long negSize = 0;

  friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

/// Objective vector of an evaluated solution. Requires a cached value.
ObjectiveVector objectiveVector(const SubsetSolution& x);

/// a is at least as good as b in both objectives. Exact comparison.
constexpr bool weaklyDominates(const ObjectiveVector& a, const ObjectiveVector& b) noexcept {
  return a.value >= b.value && a.negSize >= b.negSize;
}

/// a weakly dominates b and is strictly better in at least one objective.
constexpr bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) noexcept {
  return weaklyDominates(a, b) && (a.value > b.value || a.negSize > b.negSize);
}

constexpr bool incomparable(const ObjectiveVector& a, const ObjectiveVector& b) noexcept {
  return !weaklyDominates(a, b) && !weaklyDominates(b, a);
}

}  // namespace gsemo
