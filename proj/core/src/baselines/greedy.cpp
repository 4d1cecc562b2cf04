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

#include "gsemo/baselines/greedy.hpp"

#include <string>

#include "gsemo/core/errors.hpp"

namespace gsemo::baselines {

SubsetSolution standardGreedy(const objectives::SetFunction& f, std::size_t k) {
  const std::size_t n = f.n();
  if (k < 1 || k > n) throw GuardError("greedy needs 1 <= k <= n = " + std::to_string(n));
  SubsetSolution x(n);
  double current = f.evaluate(x);
  for (std::size_t round = 0; round < k; ++round) {
    std::size_t pick = n;
    double pickValue = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      if (x.contains(v)) continue;
      const double value = f.evaluate(x.with(v));
      if (pick == n || value > pickValue) {
        pick = v;
        pickValue = value;
      }
    }
    x.insert(pick);
    current = pickValue;
  }
  x.setCachedValue(current);
  return x;
}

}  // namespace gsemo::baselines
