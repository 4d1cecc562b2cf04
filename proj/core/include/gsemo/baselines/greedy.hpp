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

#include "gsemo/objectives/set_function.hpp"

namespace gsemo::baselines {

/// Standard greedy for size-constrained maximization: k rounds, each adding
/// the element with the largest marginal gain (lowest index on ties).
/// Returns an evaluated solution of size exactly k. Requires 1 <= k <= n.
SubsetSolution standardGreedy(const objectives::SetFunction& f, std::size_t k);

}  // namespace gsemo::baselines
