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
#include <string>
#include <string_view>

#include "gsemo/diagnostics/additive_epsilon.hpp"

namespace gsemo::diagnostics {

enum class Verdict { Pass, Fail, Unknown };
std::string_view toString(Verdict v);

/// Counterexample to a property. Fields not relevant to the property are
/// empty: monotonicity uses x and element; submodularity uses x, y and
/// element; non-negativity uses x.
struct Witness {
  SubsetSolution x;
  std::optional<SubsetSolution> y;
  std::optional<std::size_t> element;
  /// Size of the violation (a positive number).
  double amount = 0.0;

  std::string describe() const;
};

struct PropertyCheck {
  Verdict verdict = Verdict::Unknown;
  std::optional<Witness> witness;
};

struct PropertyFlags {
  PropertyCheck monotone;
  PropertyCheck submodular;
  PropertyCheck nonNegative;
};

/// Absolute slack for the monotonicity and diminishing-returns comparisons.
inline constexpr double kCertifyTolerance = 1e-12;

/// Exhaustive certification over all subsets (n <= 14):
///   monotone     f(X + v) >= f(X) - tol for all X, v outside X
///   submodular   diminishing returns over all triples, slack tol
///   nonNegative  f(X) >= 0 for all X
/// Each failure carries the smallest counterexample.
PropertyFlags certifyProperties(const objectives::SetFunction& f,
                                double tolerance = kCertifyTolerance);

}  // namespace gsemo::diagnostics
