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

#include "gsemo/diagnostics/certify.hpp"

#include <bit>
#include <sstream>
#include <vector>

namespace gsemo::diagnostics {

std::string_view toString(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unknown: break;
  }
  return "unknown";
}

std::string Witness::describe() const {
  std::ostringstream os;
  os << "X=" << x.toBitString();
  if (y) os << " Y=" << y->toBitString();
  if (element) os << " v=" << *element;
  os << " by " << amount;
  return os.str();
}

PropertyFlags certifyProperties(const objectives::SetFunction& f, double tolerance) {
  requireAtMost(f, kTripleEnumerationLimit, "property certification");
  const std::size_t n = f.n();
  const std::vector<double> table = tabulate(f);
  PropertyFlags flags;

  flags.nonNegative.verdict = Verdict::Pass;
  flags.monotone.verdict = Verdict::Pass;
  int monoSize = 0;
  int negSize = 0;
  for (std::uint64_t m = 0; m < table.size(); ++m) {
    const int size = std::popcount(m);
    if (table[m] < 0.0 && (!flags.nonNegative.witness || size < negSize)) {
      flags.nonNegative.verdict = Verdict::Fail;
      flags.nonNegative.witness = Witness{SubsetSolution::fromMask(n, m), {}, {}, -table[m]};
      negSize = size;
    }
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (m & bit) continue;
      const double drop = table[m] - table[m | bit];
      if (drop > tolerance && (!flags.monotone.witness || size < monoSize)) {
        flags.monotone.verdict = Verdict::Fail;
        flags.monotone.witness = Witness{SubsetSolution::fromMask(n, m), {}, v, drop};
        monoSize = size;
      }
    }
  }

  const DiminishingReturnsScan scan = scanDiminishingReturns(f, tolerance);
  if (scan.smallestWitness) {
    const ReturnsViolation& w = *scan.smallestWitness;
    flags.submodular.verdict = Verdict::Fail;
    flags.submodular.witness = Witness{w.x, w.y, w.element, w.violation};
  } else {
    flags.submodular.verdict = Verdict::Pass;
  }
  return flags;
}

}  // namespace gsemo::diagnostics
