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

#include <cstdint>

#include "gsemo/objectives/coverage.hpp"
#include "gsemo/objectives/cut.hpp"
#include "gsemo/objectives/facility_location.hpp"
#include "gsemo/objectives/regression.hpp"

// Seeded instance generators. Weights are small integers wherever the
// family allows, so sums and differences are exact in double precision.
namespace gsemo::objectives::generate {

/// Triangle on three vertices with unit weights.
WeightedGraph triangle();

/// G(n, p) graph. maxWeight == 1 gives unit weights, otherwise weights are
/// uniform integers in [1, maxWeight].
WeightedGraph randomGraph(std::size_t n, double edgeProbability, unsigned maxWeight,
                          std::uint64_t seed);

struct CoverageParams {
  std::size_t elements = 8;
  std::size_t sharedItems = 12;
  double coverProbability = 0.3;
  unsigned maxSharedWeight = 5;
  /// When > 0, element i also covers a private item of this weight, making
  /// every marginal gain at least privateWeight.
  double privateWeight = 0.0;
};
CoverageInstance randomCoverage(const CoverageParams& params, std::uint64_t seed);

/// Integer benefits in [0, maxBenefit]; costs uniform integers in
/// [0, maxCost] (all zero when maxCost == 0).
FacilityLocationInstance randomFacility(std::size_t customers, std::size_t facilities,
                                        unsigned maxBenefit, unsigned maxCost,
                                        std::uint64_t seed);

/// Gaussian design with neighbouring columns correlated and a target that
/// mixes positive and negative coefficients, so R^2 is typically not
/// submodular. Returned centered.
RegressionInstance randomRegression(std::size_t rows, std::size_t columns, std::uint64_t seed);

}  // namespace gsemo::objectives::generate
