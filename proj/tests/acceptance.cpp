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

// Acceptance gate: runs every criterion and prints one line per criterion.
// Optional arguments restrict the run to the given criterion ids.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "gsemo/harness/suites.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) ids = gsemo::harness::suiteCriteria("all");

  int failed = 0;
  for (int id : ids) {
    const auto c = gsemo::harness::runCriterion(id);
    std::cout << gsemo::harness::formatCriterion(c) << std::endl;
    if (!c.passed) ++failed;
  }
  std::cout << (ids.size() - failed) << '/' << ids.size() << " acceptance criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
