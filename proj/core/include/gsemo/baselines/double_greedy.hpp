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

/// Deterministic double greedy for unconstrained non-negative submodular
/// maximization (1/3-approximation).
///
/// X <- {}, Y <- V; for each element v in index order, compare
/// a = f(X + v) - f(X) with b = f(Y - v) - f(Y); add v to X when a >= b,
/// otherwise drop it from Y. Returns the evaluated final X (= Y).
SubsetSolution doubleGreedy(const objectives::SetFunction& f);

}  // namespace gsemo::baselines
