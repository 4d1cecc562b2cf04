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

#include "gsemo/harness/diagnose.hpp"

#include "gsemo/diagnostics/bounds.hpp"
#include "gsemo/objectives/perturbed.hpp"

namespace gsemo::harness {

using nlohmann::json;
namespace bounds = diagnostics::bounds;

namespace {

json checkJson(const diagnostics::PropertyCheck& c) {
  json j = {{"verdict", std::string(diagnostics::toString(c.verdict))}};
  j["witness"] = c.witness ? json(c.witness->describe()) : json(nullptr);
  return j;
}

}  // namespace

json diagnosticsJson(const objectives::SetFunction& f,
                     const diagnostics::DiagnosticsReport& report) {
  using diagnostics::Verdict;
  const std::size_t n = f.n();
  json j = {
      {"function", f.name()},
      {"n", n},
      {"k", report.k ? json(*report.k) : json(nullptr)},
      {"opt", report.opt},
      {"optSubset", report.optArg.toBitString()},
      {"gammaMin", report.gammaMin ? json(*report.gammaMin) : json(nullptr)},
      {"epsAdditive", report.epsAdditive ? json(*report.epsAdditive) : json(nullptr)},
      {"properties",
       {{"monotone", checkJson(report.flags.monotone)},
        {"submodular", checkJson(report.flags.submodular)},
        {"nonNegative", checkJson(report.flags.nonNegative)}}},
  };

  json b = json::object();
  if (!report.k) {
    b["localOptimum"] = {{"epsilon", 1.0}, {"factor", bounds::localOptimumFactor(1.0, n)}};
    b["suppressed"] = nullptr;
    j["bounds"] = b;
    return j;
  }

  const std::size_t k = *report.k;
  const Verdict mono = report.flags.monotone.verdict;
  const bool monotone = mono == Verdict::Pass || (mono == Verdict::Unknown && f.declaredMonotone());
  if (!monotone) {
    std::string why = "constrained guarantees require a monotone objective; monotonicity ";
    why += mono == Verdict::Fail ? "failed at " + report.flags.monotone.witness->describe()
                                 : std::string("is not established");
    b["suppressed"] = why;
    j["bounds"] = b;
    return j;
  }

  b["suppressed"] = nullptr;
  b["submodular"] = bounds::submodularFactor(k);
  if (report.gammaMin) {
    b["ratio"] = {{"factor", bounds::ratioFactor(*report.gammaMin)},
                  {"finiteFactor", bounds::ratioFactorFinite(*report.gammaMin, k)},
                  {"value", bounds::ratioFactor(*report.gammaMin) * report.opt}};
  }
  if (report.epsAdditive) {
    b["additive"] = {
        {"epsilon", *report.epsAdditive},
        {"value", bounds::additiveThreshold(k, *report.epsAdditive, report.opt)},
        {"finiteValue", bounds::additiveThresholdFinite(k, *report.epsAdditive, report.opt)}};
  }
  if (const auto* p = dynamic_cast<const objectives::PerturbedFunction*>(&f);
      p && p->spec().mode == objectives::PerturbationMode::Multiplicative) {
    const auto cmp = bounds::compareMultiplicativeBounds(k, p->spec().epsilon);
    b["multiplicative"] = {{"epsilon", p->spec().epsilon},
                           {"factor", cmp.ours},
                           {"greedyFactor", cmp.greedyKnown},
                           {"value", cmp.ours * report.opt}};
  }
  j["bounds"] = b;
  return j;
}

}  // namespace gsemo::harness
