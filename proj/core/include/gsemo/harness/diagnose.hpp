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

#include <nlohmann/json.hpp>

#include "gsemo/diagnostics/report.hpp"
#include "gsemo/objectives/set_function.hpp"

namespace gsemo::harness {

/// Diagnostics report plus the guarantees it implies for the report's k:
/// submodularity-ratio, additive and (for multiplicatively perturbed
/// objectives) multiplicative bounds. Constrained bounds are replaced by an
/// explanation when f is not known to be monotone. Without k, the
/// unconstrained local-optimum factor is reported instead.
nlohmann::json diagnosticsJson(const objectives::SetFunction& f,
                               const diagnostics::DiagnosticsReport& report);

}  // namespace gsemo::harness
