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

#include "gsemo/engines/one_plus_one.hpp"

#include "gsemo/engines/mutation.hpp"

namespace gsemo::engines {
namespace {

bool feasible(const SubsetSolution& x, SizeBound k) { return !k || x.size() <= *k; }

// Penalized order: feasible by f, infeasible below all feasible by -|x|.
bool atLeastAsGood(const SubsetSolution& a, double va, const SubsetSolution& b, double vb,
                   SizeBound k) {
  const bool fa = feasible(a, k);
  const bool fb = feasible(b, k);
  if (fa != fb) return fa;
  if (fa) return va >= vb;
  return a.size() <= b.size();
}

}  // namespace

RunResult onePlusOneEaRun(const objectives::SetFunction& f, const RunConfig& config) {
  const std::size_t n = f.n();
  config.validate(n);

  Rng rng(config.seed, kOnePlusOneStream);
  objectives::CountedOracle oracle(f);

  RunResult result;
  result.engine = "oneplusone";
  result.generator = std::string(Rng::kName);
  result.seed = config.seed;

  SubsetSolution current = randomSolution(n, rng);
  double value = oracle.evaluateInto(current);

  auto record = [&](std::uint64_t t) {
    std::optional<double> v;
    if (feasible(current, config.constraintK)) v = value;
    result.trace.push_back({t, v, 1});
  };
  record(0);

  std::uint64_t t = 0;
  while (t < config.maxIterations) {
    if (config.targetValue && feasible(current, config.constraintK) &&
        value >= *config.targetValue) {
      break;
    }
    ++t;
    SubsetSolution child = mutate(current, rng);
    const double childValue = oracle.evaluateInto(child);
    if (atLeastAsGood(child, childValue, current, value, config.constraintK)) {
      current = std::move(child);
      value = childValue;
    }
    if (t % config.recordTraceEvery == 0) record(t);
  }
  if (result.trace.back().iteration != t) record(t);

  result.finalArchive.assign(n + 1, std::nullopt);
  result.finalArchive[current.size()] = value;
  if (!feasible(current, config.constraintK)) {
    current = SubsetSolution(n);
    value = oracle.evaluateInto(current);
  }
  result.best = current;
  result.bestValue = value;
  result.oracleCalls = oracle.calls();
  result.iterations = t;
  return result;
}

}  // namespace gsemo::engines
