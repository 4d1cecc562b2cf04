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

#include "gsemo/core/random.hpp"
#include "gsemo/core/subset.hpp"

namespace gsemo::engines {

/// Uniform random subset: each bit is an independent fair coin.
SubsetSolution randomSolution(std::size_t n, Rng& rng);

/// Standard bit mutation: every bit flips independently with probability
/// exactly 1/n. Zero flips are possible. The parent is not modified.
SubsetSolution mutate(const SubsetSolution& x, Rng& rng);

/// V \ x.
inline SubsetSolution complement(const SubsetSolution& x) { return x.complement(); }

}  // namespace gsemo::engines
