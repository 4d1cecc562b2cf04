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

#include <gtest/gtest.h>

#include <cmath>

#include "gsemo/baselines/double_greedy.hpp"
#include "gsemo/baselines/greedy.hpp"
#include "gsemo/baselines/local_search.hpp"
#include "gsemo/core/errors.hpp"
#include "gsemo/harness/builtin.hpp"
#include "gsemo/objectives/coverage.hpp"
#include "gsemo/objectives/cut.hpp"
#include "gsemo/objectives/tabulated.hpp"
#include "oracles.hpp"

namespace gsemo::baselines {
namespace {

using objectives::ModularFunction;

objectives::CoverageFunction disjointCoverage(std::vector<double> w) {
  objectives::CoverageInstance inst;
  inst.universe = w.size();
  for (std::size_t i = 0; i < w.size(); ++i) inst.coveredBy.push_back({i});
  inst.itemWeights = std::move(w);
  return objectives::CoverageFunction(inst);
}

TEST(Greedy, DisjointCoverage) {
  const auto f = disjointCoverage({5, 3, 1});
  const SubsetSolution x = standardGreedy(f, 2);
  EXPECT_EQ(x.toBitString(), "110");
  EXPECT_EQ(*x.cachedValue(), 8.0);
}

TEST(Greedy, FullBudgetTakesEverything) {
  const auto f = disjointCoverage({5, 3, 1, 2});
  EXPECT_EQ(standardGreedy(f, 4).size(), 4u);
}

TEST(Greedy, TiesGoToTheLowestIndex) {
  const ModularFunction f({1, 2, 2, 2});
  EXPECT_EQ(standardGreedy(f, 1).toBitString(), "0100");
}

TEST(Greedy, RejectsBadK) {
  const ModularFunction f({1, 2});
  EXPECT_THROW(standardGreedy(f, 0), GuardError);
  EXPECT_THROW(standardGreedy(f, 3), GuardError);
}

TEST(Greedy, MeetsItsGuaranteeOnMonotoneSubmodularInstances) {
  for (const auto& [name, f] : harness::builtin::monotoneSubmodular(10)) {
    for (std::size_t k = 1; k <= f->n(); ++k) {
      const double opt = testing::naiveOpt(*f, k);
      EXPECT_GE(*standardGreedy(*f, k).cachedValue(), (1 - std::exp(-1.0)) * opt - 1e-9)
          << name << " k=" << k;
    }
  }
}

TEST(DoubleGreedy, SingleEdge) {
  const objectives::CutFunction f(objectives::WeightedGraph(2, {{0, 1, 1.0}}));
  const SubsetSolution x = doubleGreedy(f);
  EXPECT_EQ(*x.cachedValue(), 1.0);
  EXPECT_EQ(f.evaluate(x), 1.0);
}

TEST(DoubleGreedy, SingleElement) {
  EXPECT_EQ(doubleGreedy(ModularFunction({2.0})).size(), 1u);
  EXPECT_EQ(doubleGreedy(ModularFunction({-2.0})).size(), 0u);
}

TEST(DoubleGreedy, ThirdOfOptimum) {
  for (const auto& [name, f] : harness::builtin::nonNegativeSubmodular(12)) {
    const double opt = testing::naiveOpt(*f, f->n());
    EXPECT_GE(*doubleGreedy(*f).cachedValue(), opt / 3.0 - 1e-9) << name;
  }
}

TEST(LocalSearch, ModularReachesTheOptimum) {
  const ModularFunction f({3, -1, 2, 0.5, -4});
  LocalSearchConfig c;
  c.epsilon = 0.01;
  const auto r = approximateLocalSearch(f, c);
  EXPECT_EQ(*r.solution.cachedValue(), 5.5);
  EXPECT_EQ(r.solution.toBitString(), "10110");
}

TEST(LocalSearch, SingleElementPicksTheBetterSide) {
  LocalSearchConfig c;
  EXPECT_EQ(*approximateLocalSearch(ModularFunction({2.0}), c).solution.cachedValue(), 2.0);
  EXPECT_EQ(*approximateLocalSearch(ModularFunction({-2.0}), c).solution.cachedValue(), 0.0);
}

TEST(LocalSearch, OutputIsAnApproximateLocalOptimumMeetingTheBound) {
  for (double eps : {0.5, 1.0}) {
    for (const auto& [name, f] : harness::builtin::nonNegativeSubmodular(12)) {
      LocalSearchConfig c;
      c.epsilon = eps;
      const auto r = approximateLocalSearch(*f, c);
      ASSERT_FALSE(r.truncated);
      // Direct scan of every single-element move.
      const double fx = f->evaluate(r.localOptimum);
      const double factor = 1.0 + eps / (static_cast<double>(f->n()) * f->n());
      for (std::size_t v = 0; v < f->n(); ++v) {
        SubsetSolution y = r.localOptimum;
        y.flip(v);
        EXPECT_LE(f->evaluate(y), factor * fx) << name;
      }
      const double opt = testing::naiveOpt(*f, f->n());
      EXPECT_GE(*r.solution.cachedValue(),
                (1.0 / 3.0 - eps / static_cast<double>(f->n())) * opt - 1e-9)
          << name;
    }
  }
}

TEST(LocalSearch, TruncationIsReported) {
  const ModularFunction f({1, 1, 1, 1, 1, 1});
  LocalSearchConfig c;
  c.maxSteps = 1;
  EXPECT_TRUE(approximateLocalSearch(f, c).truncated);
  c.epsilon = 0.0;
  EXPECT_THROW(approximateLocalSearch(f, c), GuardError);
}

}  // namespace
}  // namespace gsemo::baselines
