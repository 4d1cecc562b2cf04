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

#include "gsemo/engines/run.hpp"
#include "gsemo/objectives/set_function.hpp"

namespace gsemo::engines {

inline constexpr std::uint64_t kOnePlusOneStream = 2;

/// (1+1)-EA baseline: one current solution, standard bit mutation, offspring
/// accepted when its penalized fitness is at least the parent's.
///
/// Under a size bound k, infeasible solutions (size > k) rank below every
/// feasible one and among themselves by smaller size. 1 + iterations oracle
/// calls; if the final solution is still infeasible the empty set is
/// evaluated once more and returned.
RunResult onePlusOneEaRun(const objectives::SetFunction& f, const RunConfig& config);

}  // namespace gsemo::engines
