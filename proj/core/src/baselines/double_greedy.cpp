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

#include "gsemo/baselines/double_greedy.hpp"

namespace gsemo::baselines {

SubsetSolution doubleGreedy(const objectives::SetFunction& f) {
  const std::size_t n = f.n();
  SubsetSolution grow(n);
  SubsetSolution shrink = SubsetSolution::full(n);
  double growValue = f.evaluate(grow);
  double shrinkValue = f.evaluate(shrink);
  for (std::size_t v = 0; v < n; ++v) {
    SubsetSolution added = grow.with(v);
    SubsetSolution removed = shrink.without(v);
    const double addedValue = f.evaluate(added);
    const double removedValue = f.evaluate(removed);
    if (addedValue - growValue >= removedValue - shrinkValue) {
      grow = std::move(added);
      growValue = addedValue;
    } else {
      shrink = std::move(removed);
      shrinkValue = removedValue;
    }
  }
  grow.setCachedValue(growValue);
  return grow;
}

}  // namespace gsemo::baselines
