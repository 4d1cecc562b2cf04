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

#include "gsemo/diagnostics/brute_force.hpp"

#include <bit>
#include <iostream>

#include "gsemo/diagnostics/enumeration.hpp"

namespace gsemo::diagnostics {
namespace {

// Canonical order among equal values: smaller size, then the mask whose
// lowest differing bit is set (its sorted index list is smaller).
bool precedes(std::uint64_t a, std::uint64_t b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  const std::uint64_t diff = a ^ b;
  return diff != 0 && (a & (diff & (0 - diff))) != 0;
}

}  // namespace

OptResult bruteForceOpt(const objectives::SetFunction& f, SizeBound bound, bool allowOverride) {
  requireAtMost(f, allowOverride ? kBruteForceOverrideLimit : kBruteForceLimit,
                "brute-force optimum search");
  const std::size_t n = f.n();
  if (n > kBruteForceLimit) {
    std::cerr << "warning: brute-force search over 2^" << n << " subsets\n";
  }
  const int maxSize = bound ? static_cast<int>(*bound) : static_cast<int>(n);
  std::uint64_t bestMask = 0;
  double best = f.evaluate(SubsetSolution(n));
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) > maxSize) continue;
    const double v = f.evaluate(SubsetSolution::fromMask(n, m));
    if (v > best || (v == best && precedes(m, bestMask))) {
      best = v;
      bestMask = m;
    }
  }
  OptResult r{best, SubsetSolution::fromMask(n, bestMask)};
  r.argmax.setCachedValue(best);
  return r;
}

}  // namespace gsemo::diagnostics
