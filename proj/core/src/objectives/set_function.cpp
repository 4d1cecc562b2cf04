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

#include "gsemo/objectives/set_function.hpp"

#include <stdexcept>

namespace gsemo::objectives {

void checkDomain(const SetFunction& f, const SubsetSolution& x) {
  if (x.n() != f.n()) {
    throw std::invalid_argument(f.name() + ": subset over " + std::to_string(x.n()) +
                                " elements, expected " + std::to_string(f.n()));
  }
}

}  // namespace gsemo::objectives
