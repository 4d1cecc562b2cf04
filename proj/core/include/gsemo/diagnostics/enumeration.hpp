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
#include <vector>

#include "gsemo/objectives/set_function.hpp"

namespace gsemo::diagnostics {

/// Largest n accepted by exhaustive optimum search, and the limit with an
/// explicit override.
inline constexpr std::size_t kBruteForceLimit = 24;
inline constexpr std::size_t kBruteForceOverrideLimit = 28;
/// Largest n for triple enumerations (X subset of Y, v outside Y).
inline constexpr std::size_t kTripleEnumerationLimit = 14;
/// Default oracle-call budget for submodularity-ratio enumeration.
inline constexpr std::uint64_t kRatioCallBudget = 100'000'000;

/// f on every subset, indexed by bitmask.
std::vector<double> tabulate(const objectives::SetFunction& f);

/// Throws GuardError naming the limit when f.n() > limit.
void requireAtMost(const objectives::SetFunction& f, std::size_t limit, const char* what);

}  // namespace gsemo::diagnostics
