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

#include "gsemo/diagnostics/additive_epsilon.hpp"

#include <bit>
#include <cstdint>
#include <tuple>
#include <vector>

namespace gsemo::diagnostics {

DiminishingReturnsScan scanDiminishingReturns(const objectives::SetFunction& f, double tolerance) {
  requireAtMost(f, kTripleEnumerationLimit, "diminishing-returns enumeration");
  const std::size_t n = f.n();
  const std::vector<double> table = tabulate(f);
  const std::uint64_t full = std::uint64_t{1} << n;

  DiminishingReturnsScan scan;
  std::tuple<int, std::uint64_t, std::size_t> witnessKey{};
  std::vector<double> minGain(full);
  std::vector<std::uint64_t> argMin(full);

  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t vbit = std::uint64_t{1} << v;
    // minGain[Y] = min over X subset of Y of gain(X), by a subset-minimum
    // sweep over every bit except v.
    for (std::uint64_t m = 0; m < full; ++m) {
      if (m & vbit) continue;
      minGain[m] = table[m | vbit] - table[m];
      argMin[m] = m;
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (b == v) continue;
      const std::uint64_t bbit = std::uint64_t{1} << b;
      for (std::uint64_t m = 0; m < full; ++m) {
        if ((m & vbit) || !(m & bbit)) continue;
        const std::uint64_t sub = m ^ bbit;
        if (minGain[sub] < minGain[m] || (minGain[sub] == minGain[m] && argMin[sub] < argMin[m])) {
          minGain[m] = minGain[sub];
          argMin[m] = argMin[sub];
        }
      }
    }
    for (std::uint64_t y = 0; y < full; ++y) {
      if (y & vbit) continue;
      const double violation = (table[y | vbit] - table[y]) - minGain[y];
      if (violation > scan.maxViolation) scan.maxViolation = violation;
      if (violation > tolerance) {
        const std::tuple<int, std::uint64_t, std::size_t> key{std::popcount(y), y, v};
        if (!scan.smallestWitness || key < witnessKey) {
          witnessKey = key;
          scan.smallestWitness = ReturnsViolation{SubsetSolution::fromMask(n, argMin[y]),
                                                  SubsetSolution::fromMask(n, y), v, violation};
        }
      }
    }
  }
  return scan;
}

double minimalAdditiveEpsilon(const objectives::SetFunction& f) {
  return scanDiminishingReturns(f, 0.0).maxViolation;
}

}  // namespace gsemo::diagnostics
