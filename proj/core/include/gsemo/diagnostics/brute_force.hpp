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

namespace gsemo::diagnostics {

struct OptResult {
  double value = 0.0;
  SubsetSolution argmax;
};

/// Exact maximum of f over all subsets, or all subsets of size <= bound.
///
/// Ties go to the smaller subset, then to the lexicographically smaller
/// sorted index list. Refuses n > 24 (n > 28 with allowOverride) with a
/// GuardError.
OptResult bruteForceOpt(const objectives::SetFunction& f, SizeBound bound,
                        bool allowOverride = false);

}  // namespace gsemo::diagnostics
