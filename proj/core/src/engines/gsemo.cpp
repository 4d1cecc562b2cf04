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

#include "gsemo/engines/gsemo.hpp"

#include <string>

#include "gsemo/core/errors.hpp"
#include "gsemo/engines/mutation.hpp"

namespace gsemo::engines {

void RunConfig::validate(std::size_t n) const {
  if (maxIterations < 1) throw GuardError("maxIterations must be >= 1");
  if (recordTraceEvery < 1) throw GuardError("recordTraceEvery must be >= 1");
  if (constraintK && (*constraintK < 1 || *constraintK > n)) {
    throw GuardError("constraint k must satisfy 1 <= k <= n = " + std::to_string(n));
  }
}

namespace {

std::optional<double> bestFeasibleValue(const ParetoArchive& archive, SizeBound k) {
  const std::size_t last = k ? std::min(*k, archive.n()) : archive.n();
  for (std::size_t s = 0; s <= last; ++s) {
    if (archive.slot(s)) return *bestFeasible(archive, k).cachedValue();
  }
  return std::nullopt;
}

}  // namespace

RunResult gsemoRun(const objectives::SetFunction& f, const RunConfig& config,
                   const ArchiveObserver& observer) {
  const std::size_t n = f.n();
  config.validate(n);

  Rng rng(config.seed, kGsemoStream);
  objectives::CountedOracle oracle(f);
  ParetoArchive archive(n);

  RunResult result;
  result.engine = "gsemo";
  result.generator = std::string(Rng::kName);
  result.seed = config.seed;

  auto record = [&](std::uint64_t t) {
    result.trace.push_back({t, bestFeasibleValue(archive, config.constraintK), archive.occupancy()});
  };
  auto targetReached = [&] {
    if (!config.targetValue) return false;
    const auto v = bestFeasibleValue(archive, config.constraintK);
    return v && *v >= *config.targetValue;
  };

  SubsetSolution initial = randomSolution(n, rng);
  const double initialValue = oracle(initial);
  archive.update(std::move(initial), initialValue);
  record(0);

  std::uint64_t t = 0;
  while (t < config.maxIterations && !targetReached()) {
    ++t;
    SubsetSolution child = mutate(archive.nth(rng.uniformIndex(archive.occupancy())), rng);
    SubsetSolution flipped = complement(child);
    const double childValue = oracle(child);
    archive.update(std::move(child), childValue);
    const double flippedValue = oracle(flipped);
    archive.update(std::move(flipped), flippedValue);

    if (observer) observer(t, archive);
    if (t % config.recordTraceEvery == 0) record(t);
  }
  if (result.trace.back().iteration != t) record(t);

  const SubsetSolution& best = bestFeasible(archive, config.constraintK);
  result.best = best;
  result.bestValue = *best.cachedValue();
  result.oracleCalls = oracle.calls();
  result.iterations = t;
  result.finalArchive = archive.valueSummary();
  return result;
}

}  // namespace gsemo::engines
