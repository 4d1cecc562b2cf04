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

#include "gsemo/baselines/local_search.hpp"

#include <optional>

#include "gsemo/core/errors.hpp"

namespace gsemo::baselines {
namespace {

double improvementFactor(double epsilon, std::size_t n) {
  const double nn = static_cast<double>(n);
  return 1.0 + epsilon / (nn * nn);
}

struct Move {
  std::size_t element;
  double value;
};

// Best neighbour over insertions first, then deletions, each in index order;
// strict '>' keeps the earlier candidate on ties.
std::optional<Move> bestImprovingMove(const objectives::SetFunction& f, const SubsetSolution& x,
                                      double fx, double factor) {
  std::optional<Move> best;
  const double bar = factor * fx;
  for (int pass = 0; pass < 2; ++pass) {
    const bool insertion = pass == 0;
    for (std::size_t v = 0; v < x.n(); ++v) {
      if (x.contains(v) == insertion) continue;
      const double value = f.evaluate(insertion ? x.with(v) : x.without(v));
      if (value > bar && (!best || value > best->value)) best = Move{v, value};
    }
  }
  return best;
}

}  // namespace

bool isApproximateLocalOptimum(const objectives::SetFunction& f, const SubsetSolution& x,
                               double epsilon) {
  return !bestImprovingMove(f, x, f.evaluate(x), improvementFactor(epsilon, f.n()));
}

LocalSearchResult approximateLocalSearch(const objectives::SetFunction& f,
                                         const LocalSearchConfig& config) {
  if (!(config.epsilon > 0.0)) throw GuardError("local search epsilon must be > 0");
  if (config.maxSteps < 1) throw GuardError("local search maxSteps must be >= 1");
  const std::size_t n = f.n();
  const double factor = improvementFactor(config.epsilon, n);

  SubsetSolution x(n);
  double fx = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    const double value = f.evaluate(SubsetSolution(n).with(v));
    if (v == 0 || value > fx) {
      x = SubsetSolution(n).with(v);
      fx = value;
    }
  }

  LocalSearchResult result;
  for (;;) {
    const auto move = bestImprovingMove(f, x, fx, factor);
    if (!move) break;
    if (result.steps == config.maxSteps) {
      result.truncated = true;
      break;
    }
    x.flip(move->element);
    fx = move->value;
    ++result.steps;
  }
  x.setCachedValue(fx);

  SubsetSolution flipped = x.complement();
  const double flippedValue = f.evaluate(flipped);
  flipped.setCachedValue(flippedValue);
  result.solution = flippedValue > fx ? flipped : x;
  result.localOptimum = std::move(x);
  return result;
}

}  // namespace gsemo::baselines
