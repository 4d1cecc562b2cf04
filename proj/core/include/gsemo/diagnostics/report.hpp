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

#include "gsemo/diagnostics/brute_force.hpp"
#include "gsemo/diagnostics/certify.hpp"

namespace gsemo::diagnostics {

struct DiagnosticsReport {
  SizeBound k;
  double opt = 0.0;
  SubsetSolution optArg;
  /// Present when f is monotone and a finite k was given.
  std::optional<double> gammaMin;
  /// Present when n is within the triple-enumeration limit.
  std::optional<double> epsAdditive;
  PropertyFlags flags;
};

struct DiagnosticsOptions {
  bool allowOverride = false;
  std::uint64_t ratioCallBudget = kRatioCallBudget;
};

/// Optimum, properties, minimal additive eps and gamma_min in one pass.
/// Parts whose guards refuse the instance size are left empty; the optimum
/// search itself still throws on oversized instances.
DiagnosticsReport runDiagnostics(const objectives::SetFunction& f, SizeBound k,
                                 const DiagnosticsOptions& options = {});

}  // namespace gsemo::diagnostics
