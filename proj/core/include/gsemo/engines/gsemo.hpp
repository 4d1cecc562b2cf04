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

inline constexpr std::uint64_t kGsemoStream = 1;

/// GSEMO with complement offspring on the bi-objective problem (f, -|x|).
///
///   x <- uniform random subset; P <- {x}
///   repeat maxIterations times:
///     pick x from P uniformly; x' <- mutate(x); x'' <- V \ x'
///     offer x', then x'', to P (ParetoArchive::update)
///
/// Exactly 1 + 2 * iterations oracle calls. The returned solution is the best
/// of P within the size bound. Deterministic in (f, config).
RunResult gsemoRun(const objectives::SetFunction& f, const RunConfig& config,
                   const ArchiveObserver& observer = {});

}  // namespace gsemo::engines
