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

#include "gsemo/diagnostics/enumeration.hpp"

namespace gsemo::diagnostics {

/// Joint gains at or below this are treated as non-binding.
inline constexpr double kRatioDenominatorCutoff = 1e-12;

/// Submodularity ratio gamma_{U,k}(f): the minimum over L subset of U and
/// S disjoint from U with 1 <= |S| <= k of
///
///     sum_{v in S} (f(L + v) - f(L))  /  (f(L + S) - f(L)).
///
/// Pairs whose denominator is <= kRatioDenominatorCutoff are skipped; 1.0 is
/// returned when every pair is skipped. Throws GuardError when the
/// enumeration would exceed callBudget oracle calls.
double submodularityRatio(const objectives::SetFunction& f, const SubsetSolution& u,
                          std::size_t k, std::uint64_t callBudget = kRatioCallBudget);

/// min over all x with |x| = k - 1 of gamma_{x,k}(f). k >= 1.
double gammaMin(const objectives::SetFunction& f, std::size_t k,
                std::uint64_t callBudget = kRatioCallBudget);

/// Upper bound on oracle calls submodularityRatio makes for |U| = uSize.
std::uint64_t ratioCallEstimate(std::size_t n, std::size_t uSize, std::size_t k);

}  // namespace gsemo::diagnostics
