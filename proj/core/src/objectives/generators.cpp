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

#include "gsemo/objectives/generators.hpp"

#include "gsemo/core/random.hpp"

namespace gsemo::objectives::generate {

WeightedGraph triangle() { return WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}); }

WeightedGraph randomGraph(std::size_t n, double edgeProbability, unsigned maxWeight,
                          std::uint64_t seed) {
  Rng rng(seed, 0x6772617068ULL);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.uniform01() >= edgeProbability) continue;
      const double w = maxWeight <= 1 ? 1.0 : static_cast<double>(1 + rng.uniformIndex(maxWeight));
      edges.push_back({u, v, w});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

CoverageInstance randomCoverage(const CoverageParams& params, std::uint64_t seed) {
  Rng rng(seed, 0x636f766572ULL);
  CoverageInstance inst;
  const bool withPrivate = params.privateWeight > 0.0;
  inst.universe = params.sharedItems + (withPrivate ? params.elements : 0);
  for (std::size_t j = 0; j < params.sharedItems; ++j) {
    inst.itemWeights.push_back(static_cast<double>(1 + rng.uniformIndex(params.maxSharedWeight)));
  }
  if (withPrivate) inst.itemWeights.resize(inst.universe, params.privateWeight);
  inst.coveredBy.resize(params.elements);
  for (std::size_t i = 0; i < params.elements; ++i) {
    for (std::size_t j = 0; j < params.sharedItems; ++j) {
      if (rng.uniform01() < params.coverProbability) inst.coveredBy[i].push_back(j);
    }
    if (withPrivate) inst.coveredBy[i].push_back(params.sharedItems + i);
  }
  return inst;
}

FacilityLocationInstance randomFacility(std::size_t customers, std::size_t facilities,
                                        unsigned maxBenefit, unsigned maxCost,
                                        std::uint64_t seed) {
  Rng rng(seed, 0x666163696cULL);
  FacilityLocationInstance inst;
  inst.benefit.assign(customers, std::vector<double>(facilities, 0.0));
  for (auto& row : inst.benefit) {
    for (double& b : row) b = static_cast<double>(rng.uniformIndex(maxBenefit + 1));
  }
  inst.facilityCosts.assign(facilities, 0.0);
  if (maxCost > 0) {
    for (double& c : inst.facilityCosts) c = static_cast<double>(rng.uniformIndex(maxCost + 1));
  }
  return inst;
}

RegressionInstance randomRegression(std::size_t rows, std::size_t columns, std::uint64_t seed) {
  Rng rng(seed, 0x7265677265ULL);
  RegressionInstance inst;
  inst.rows = rows;
  inst.columns = columns;
  inst.design.assign(rows * columns, 0.0);
  inst.target.assign(rows, 0.0);
  std::vector<double> beta(columns);
  for (std::size_t c = 0; c < columns; ++c) {
    beta[c] = (c % 2 == 0 ? 1.0 : -0.8) * (0.5 + rng.uniform01());
  }
  for (std::size_t r = 0; r < rows; ++r) {
    double prev = rng.normal();
    for (std::size_t c = 0; c < columns; ++c) {
      const double z = rng.normal();
      const double x = z + 0.7 * prev;
      prev = z;
      inst.design[r * columns + c] = x;
      inst.target[r] += beta[c] * x;
    }
    inst.target[r] += 0.5 * rng.normal();
  }
  inst.center();
  return inst;
}

}  // namespace gsemo::objectives::generate
