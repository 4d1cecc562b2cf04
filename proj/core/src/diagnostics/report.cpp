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

#include "gsemo/diagnostics/report.hpp"

#include "gsemo/diagnostics/submodularity_ratio.hpp"

namespace gsemo::diagnostics {

DiagnosticsReport runDiagnostics(const objectives::SetFunction& f, SizeBound k,
                                 const DiagnosticsOptions& options) {
  DiagnosticsReport report;
  report.k = k;
  OptResult opt = bruteForceOpt(f, k, options.allowOverride);
  report.opt = opt.value;
  report.optArg = std::move(opt.argmax);

  bool monotone = f.declaredMonotone();
  if (f.n() <= kTripleEnumerationLimit) {
    report.flags = certifyProperties(f);
    report.epsAdditive = scanDiminishingReturns(f).maxViolation;
    monotone = report.flags.monotone.verdict == Verdict::Pass;
  }
  if (monotone && k && *k >= 1 && *k <= f.n()) {
    report.gammaMin = gammaMin(f, *k, options.ratioCallBudget);
  }
  return report;
}

}  // namespace gsemo::diagnostics
