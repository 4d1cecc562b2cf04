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

#include "gsemo/harness/builtin.hpp"

#include <memory>

#include "gsemo/objectives/coverage.hpp"
#include "gsemo/objectives/cut.hpp"
#include "gsemo/objectives/facility_location.hpp"
#include "gsemo/objectives/generators.hpp"
#include "gsemo/objectives/regression.hpp"

namespace gsemo::harness::builtin {

using namespace gsemo::objectives;

namespace {

std::string tag(const std::string& family, std::size_t n, std::uint64_t seed) {
  return family + "-n" + std::to_string(n) + "-s" + std::to_string(seed);
}

NamedFunction cut(std::size_t n, double p, unsigned maxWeight, std::uint64_t seed) {
  return {tag(maxWeight <= 1 ? "cut-unit" : "cut-weighted", n, seed),
          std::make_shared<CutFunction>(generate::randomGraph(n, p, maxWeight, seed))};
}

NamedFunction coverage(std::size_t n, std::uint64_t seed) {
  generate::CoverageParams params;
  params.elements = n;
  params.sharedItems = n + 4;
  params.coverProbability = 0.3;
  return {tag("coverage", n, seed),
          std::make_shared<CoverageFunction>(generate::randomCoverage(params, seed))};
}

NamedFunction facility(std::size_t n, unsigned maxCost, std::uint64_t seed) {
  return {tag(maxCost == 0 ? "facility" : "facility-cost", n, seed),
          std::make_shared<FacilityLocationFunction>(
              generate::randomFacility(n + 2, n, 10, maxCost, seed))};
}

}  // namespace

std::vector<NamedFunction> maxCutGraphs12() {
  return {cut(12, 0.5, 1, 101), cut(12, 0.5, 1, 102), cut(12, 0.5, 1, 103),
          cut(12, 0.5, 5, 104), cut(12, 0.5, 5, 105)};
}

std::vector<NamedFunction> nonNegativeSubmodular(std::size_t maxN) {
  std::vector<NamedFunction> out;
  out.push_back({"cut-triangle", std::make_shared<CutFunction>(generate::triangle())});
  for (std::size_t n : {4u, 6u, 8u, 10u, 12u}) {
    if (n > maxN) continue;
    out.push_back(cut(n, 0.5, 1, 200 + n));
    out.push_back(cut(n, 0.6, 5, 300 + n));
    out.push_back(coverage(n, 400 + n));
    // Opening costs up to 3 against benefits in [0, 10] keep these
    // non-negative; the constructor certifies it.
    auto withCost = facility(n, 3, 500 + n);
    if (withCost.f->declaredNonNegative()) out.push_back(std::move(withCost));
    out.push_back(facility(n, 0, 600 + n));
  }
  return out;
}

std::vector<NamedFunction> monotoneSubmodular(std::size_t maxN) {
  std::vector<NamedFunction> out;
  for (std::size_t n : {4u, 6u, 8u, 10u, 12u}) {
    if (n > maxN) continue;
    out.push_back(coverage(n, 400 + n));
    out.push_back(coverage(n, 700 + n));
    out.push_back(facility(n, 0, 600 + n));
  }
  return out;
}

SetFunctionPtr privateCoverage(std::size_t n, std::uint64_t seed, double privateWeight) {
  generate::CoverageParams params;
  params.elements = n;
  params.sharedItems = n + 4;
  params.coverProbability = 0.25;
  params.privateWeight = privateWeight;
  return std::make_shared<CoverageFunction>(generate::randomCoverage(params, seed));
}

SetFunctionPtr perturbedCoverage(std::size_t n, PerturbationMode mode, double epsilon,
                                 std::uint64_t seed, double privateWeight) {
  return std::make_shared<PerturbedFunction>(privateCoverage(n, seed, privateWeight),
                                             PerturbationSpec{mode, epsilon, seed * 31 + 7});
}

SetFunctionPtr regression(std::size_t rows, std::size_t columns, std::uint64_t seed) {
  return std::make_shared<RegressionR2Function>(generate::randomRegression(rows, columns, seed));
}

std::vector<NamedFunction> everything(std::size_t maxN) {
  std::vector<NamedFunction> out = nonNegativeSubmodular(maxN);
  for (auto& f : monotoneSubmodular(maxN)) out.push_back(std::move(f));
  for (std::size_t n : {4u, 6u, 8u, 10u, 12u}) {
    if (n > maxN) continue;
    out.push_back({tag("regression", n, 800 + n), regression(4 * n, n, 800 + n)});
    out.push_back({tag("coverage-additive", n, 900 + n),
                   perturbedCoverage(n, PerturbationMode::Additive, 0.1, 900 + n)});
    out.push_back({tag("coverage-multiplicative", n, 950 + n),
                   perturbedCoverage(n, PerturbationMode::Multiplicative, 0.1, 950 + n)});
  }
  return out;
}

}  // namespace gsemo::harness::builtin
