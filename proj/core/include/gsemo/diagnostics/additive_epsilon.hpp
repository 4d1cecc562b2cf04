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

#include <optional>

#include "gsemo/diagnostics/enumeration.hpp"

namespace gsemo::diagnostics {

/// A diminishing-returns triple X subset of Y, v outside Y, with
/// violation = [f(Y+v) - f(Y)] - [f(X+v) - f(X)].
struct ReturnsViolation {
  SubsetSolution x;
  SubsetSolution y;
  std::size_t element = 0;
  double violation = 0.0;
};

struct DiminishingReturnsScan {
  /// max violation over all triples, at least 0.
  double maxViolation = 0.0;
  /// Among triples with violation > tolerance: smallest |Y|, then smallest
  /// Y mask, then lowest v, with the X minimizing f(X+v) - f(X).
  std::optional<ReturnsViolation> smallestWitness;
};

/// Scans every (X subset of Y, v outside Y) triple. n <= 14.
DiminishingReturnsScan scanDiminishingReturns(const objectives::SetFunction& f,
                                              double tolerance = 0.0);

/// Least eps for which f(X+v) - f(X) >= f(Y+v) - f(Y) - eps holds for all
/// triples; 0 exactly for submodular f.
double minimalAdditiveEpsilon(const objectives::SetFunction& f);

}  // namespace gsemo::diagnostics
