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

#include "gsemo/diagnostics/enumeration.hpp"

#include <string>

#include "gsemo/core/errors.hpp"

namespace gsemo::diagnostics {

std::vector<double> tabulate(const objectives::SetFunction& f) {
  requireAtMost(f, kBruteForceLimit, "tabulation");
  const std::size_t n = f.n();
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < table.size(); ++m) {
    table[m] = f.evaluate(SubsetSolution::fromMask(n, m));
  }
  return table;
}

void requireAtMost(const objectives::SetFunction& f, std::size_t limit, const char* what) {
  if (f.n() > limit) {
    throw GuardError(std::string(what) + " is limited to n <= " + std::to_string(limit) +
                     " (got n = " + std::to_string(f.n()) + ")");
  }
}

}  // namespace gsemo::diagnostics
