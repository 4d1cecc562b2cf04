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

#include "gsemo/engines/mutation.hpp"

namespace gsemo::engines {

SubsetSolution randomSolution(std::size_t n, Rng& rng) {
  SubsetSolution x(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.coin()) x.insert(i);
  }
  return x;
}

SubsetSolution mutate(const SubsetSolution& x, Rng& rng) {
  SubsetSolution y = x;
  y.clearCachedValue();
  const std::size_t n = x.n();
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.oneIn(n)) y.flip(i);
  }
  return y;
}

}  // namespace gsemo::engines
