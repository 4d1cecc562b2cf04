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

#include "gsemo/core/errors.hpp"
#include "gsemo/diagnostics/additive_epsilon.hpp"
#include "gsemo/diagnostics/bounds.hpp"
#include "gsemo/diagnostics/brute_force.hpp"
#include "gsemo/diagnostics/certify.hpp"
#include "gsemo/diagnostics/enumeration.hpp"
#include "gsemo/diagnostics/report.hpp"
#include "gsemo/diagnostics/submodularity_ratio.hpp"
#include "gsemo/harness/builtin.hpp"
#include "gsemo/objectives/coverage.hpp"
#include "gsemo/objectives/cut.hpp"
#include "gsemo/objectives/generators.hpp"
#include "gsemo/objectives/perturbed.hpp"
#include "gsemo/objectives/regression.hpp"
#include "gsemo/objectives/tabulated.hpp"
#include "oracles.hpp"

namespace gsemo::diagnostics {
namespace {

using objectives::CutFunction;
using objectives::ModularFunction;
using objectives::TabulatedFunction;
namespace generate = objectives::generate;

const objectives::RegressionR2Function& fixedRegression() {
  static const objectives::RegressionR2Function f(generate::randomRegression(10, 4, 2026));
  return f;
}

TEST(BruteForce, TriangleTieBreak) {
  const CutFunction f(generate::triangle());
  const OptResult r = bruteForceOpt(f, kUnbounded);
  EXPECT_EQ(r.value, 2.0);
  EXPECT_EQ(r.argmax.toBitString(), "100");
}

TEST(BruteForce, SmallerSizeWinsTies) {
  const ModularFunction f({1, 0, 0});
  EXPECT_EQ(bruteForceOpt(f, kUnbounded).argmax.toBitString(), "100");
}

TEST(BruteForce, MatchesNaiveEnumeration) {
  for (const auto& [name, f] : harness::builtin::everything(10)) {
    for (std::size_t k : {1u, 2u, 3u}) {
      EXPECT_EQ(bruteForceOpt(*f, k).value, testing::naiveOpt(*f, k)) << name;
    }
    const OptResult all = bruteForceOpt(*f, kUnbounded);
    EXPECT_EQ(all.value, testing::naiveOpt(*f, f->n())) << name;
    EXPECT_EQ(f->evaluate(all.argmax), all.value);
    EXPECT_GE(all.value, bruteForceOpt(*f, 2).value);
  }
}

TEST(BruteForce, MonotoneFullBudgetIsTheGroundSet) {
  const objectives::CoverageFunction f(generate::randomCoverage({}, 4));
  EXPECT_EQ(bruteForceOpt(f, f.n()).value, f.evaluate(SubsetSolution::full(f.n())));
}

TEST(BruteForce, ZeroBudgetIsTheEmptySet) {
  const ModularFunction f({-1, 2});
  const OptResult r = bruteForceOpt(f, 0);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_TRUE(r.argmax.empty());
}

TEST(BruteForce, GuardRefusesLargeInstances) {
  const ModularFunction f(std::vector<double>(25, 1.0));
  try {
    bruteForceOpt(f, kUnbounded);
    FAIL();
  } catch (const GuardError& e) {
    EXPECT_NE(std::string(e.what()).find("24"), std::string::npos);
  }
  const ModularFunction huge(std::vector<double>(29, 1.0));
  EXPECT_THROW(bruteForceOpt(huge, kUnbounded, true), GuardError);
}

TEST(SubmodularityRatio, CoverageIsOne) {
  const objectives::CoverageFunction f(generate::randomCoverage({6, 9, 0.4, 5, 0.0}, 8));
  for (std::uint64_t u = 0; u < 64; ++u) {
    for (std::size_t k = 1; k <= 6; ++k) {
      ASSERT_NEAR(submodularityRatio(f, SubsetSolution::fromMask(6, u), k), 1.0, 1e-9);
    }
  }
}

TEST(SubmodularityRatio, ModularIsOne) {
  const ModularFunction f({1, 2, 3, 4});
  EXPECT_NEAR(submodularityRatio(f, SubsetSolution::fromMask(4, 0b0011), 2), 1.0, 1e-12);
}

TEST(SubmodularityRatio, MatchesNestedLoopOracle) {
  const auto& f = fixedRegression();
  const auto t = testing::valuesOf(f);
  const double g = submodularityRatio(f, SubsetSolution::fromMask(4, 0b0001), 2);
  EXPECT_GT(g, 0.0);
  EXPECT_LE(g, 1.0 + 1e-9);
  EXPECT_NEAR(g, testing::naiveRatio(t, 4, 0b0001, 2), 1e-12);
  for (std::uint64_t u = 0; u < 16; ++u) {
    for (std::size_t k = 1; k <= 4; ++k) {
      EXPECT_NEAR(submodularityRatio(f, SubsetSolution::fromMask(4, u), k),
                  testing::naiveRatio(t, 4, u, k), 1e-12);
    }
  }
}

TEST(SubmodularityRatio, BudgetGuard) {
  const ModularFunction f(std::vector<double>(16, 1.0));
  EXPECT_THROW(submodularityRatio(f, SubsetSolution::fromMask(16, 0xff), 8, 1000), GuardError);
}

TEST(GammaMin, MatchesOracleOnRegression) {
  const auto& f = fixedRegression();
  const auto t = testing::valuesOf(f);
  for (std::size_t k = 1; k <= 4; ++k) {
    double expected = 1e300;
    for (std::uint64_t u = 0; u < 16; ++u) {
      if (static_cast<std::size_t>(std::popcount(u)) == k - 1) {
        expected = std::min(expected, testing::naiveRatio(t, 4, u, k));
      }
    }
    EXPECT_NEAR(gammaMin(f, k), expected, 1e-12) << "k=" << k;
  }
  EXPECT_EQ(gammaMin(f, 1), 1.0);
}

TEST(GammaMin, NonSubmodularRegressionBelowOne) {
  const objectives::RegressionR2Function f(generate::randomRegression(40, 10, 31));
  const double g = gammaMin(f, 3);
  EXPECT_GT(g, 0.0);
  EXPECT_LT(g, 1.0);
}

TEST(AdditiveEpsilon, MatchesTripleLoop) {
  for (const auto& [name, f] : harness::builtin::everything(8)) {
    EXPECT_NEAR(minimalAdditiveEpsilon(*f), testing::naiveEpsilon(testing::valuesOf(*f), f->n()),
                1e-12)
        << name;
  }
}

TEST(AdditiveEpsilon, SubmodularAndModularAreZero) {
  EXPECT_EQ(minimalAdditiveEpsilon(ModularFunction({1, 5, 2, 7})), 0.0);
  const objectives::CoverageFunction cov(generate::randomCoverage({}, 3));
  EXPECT_EQ(minimalAdditiveEpsilon(cov), 0.0);
}

TEST(AdditiveEpsilon, PerturbedWithinSpec) {
  const auto f = harness::builtin::perturbedCoverage(8, objectives::PerturbationMode::Additive,
                                                     0.1, 5);
  EXPECT_LE(minimalAdditiveEpsilon(*f), 0.1);
}

TEST(AdditiveEpsilon, WitnessIsAViolation) {
  // f = |X|^2 is supermodular.
  const auto f = TabulatedFunction::from(
      4, [](const SubsetSolution& x) { return double(x.size() * x.size()); }, true, true);
  const auto scan = scanDiminishingReturns(f, 1e-12);
  ASSERT_TRUE(scan.smallestWitness);
  // Largest at X = {}, |Y| = 3: (16 - 9) - (1 - 0).
  EXPECT_EQ(scan.maxViolation, 6.0);
  const auto& w = *scan.smallestWitness;
  const double gy = f.evaluate(w.y.with(w.element)) - f.evaluate(w.y);
  const double gx = f.evaluate(w.x.with(w.element)) - f.evaluate(w.x);
  EXPECT_EQ(gy - gx, w.violation);
  EXPECT_GT(w.violation, 0.0);
}

TEST(Certify, CutIsSubmodularNonMonotone) {
  const CutFunction f(generate::triangle());
  const PropertyFlags p = certifyProperties(f);
  EXPECT_EQ(p.monotone.verdict, Verdict::Fail);
  ASSERT_TRUE(p.monotone.witness);
  const auto& w = *p.monotone.witness;
  EXPECT_LT(f.evaluate(w.x.with(*w.element)), f.evaluate(w.x));
  EXPECT_EQ(p.submodular.verdict, Verdict::Pass);
  EXPECT_EQ(p.nonNegative.verdict, Verdict::Pass);
}

TEST(Certify, CoveragePassesEverything) {
  const objectives::CoverageFunction f(generate::randomCoverage({}, 12));
  const PropertyFlags p = certifyProperties(f);
  EXPECT_EQ(p.monotone.verdict, Verdict::Pass);
  EXPECT_EQ(p.submodular.verdict, Verdict::Pass);
  EXPECT_EQ(p.nonNegative.verdict, Verdict::Pass);
  EXPECT_EQ(f.evaluate(SubsetSolution(f.n())), 0.0);
}

TEST(Certify, RegressionIsMonotoneNonNegative) {
  const PropertyFlags p = certifyProperties(fixedRegression());
  EXPECT_EQ(p.monotone.verdict, Verdict::Pass);
  EXPECT_EQ(p.nonNegative.verdict, Verdict::Pass);
  const bool submodular = testing::naiveEpsilon(testing::valuesOf(fixedRegression()), 4) <= 1e-12;
  EXPECT_EQ(p.submodular.verdict == Verdict::Pass, submodular);
}

TEST(Certify, NegativeValueWitness) {
  const ModularFunction f({1, -2});
  const PropertyFlags p = certifyProperties(f);
  EXPECT_EQ(p.nonNegative.verdict, Verdict::Fail);
  EXPECT_EQ(p.nonNegative.witness->x.toBitString(), "01");
}

TEST(Certify, GuardAboveFourteen) {
  EXPECT_THROW(certifyProperties(ModularFunction(std::vector<double>(15, 1.0))), GuardError);
}

TEST(Report, SubmodularCoverage) {
  const objectives::CoverageFunction f(generate::randomCoverage({}, 21));
  const DiagnosticsReport r = runDiagnostics(f, 3);
  ASSERT_TRUE(r.gammaMin);
  EXPECT_NEAR(*r.gammaMin, 1.0, 1e-9);
  EXPECT_EQ(*r.epsAdditive, 0.0);
  EXPECT_EQ(r.opt, testing::naiveOpt(f, 3));
}

TEST(Report, CutHasNoGamma) {
  const CutFunction f(generate::randomGraph(6, 0.5, 2, 1));
  const DiagnosticsReport r = runDiagnostics(f, 2);
  EXPECT_FALSE(r.gammaMin);
  EXPECT_EQ(r.flags.monotone.verdict, Verdict::Fail);
}

TEST(Bounds, SeriesEqualsClosedForm) {
  for (std::size_t k = 1; k <= 60; ++k) {
    for (double eps : {0.0, 0.01, 0.1, 0.3, 0.5, 0.9}) {
      EXPECT_NEAR(bounds::multiplicativeFactor(k, eps), bounds::multiplicativeFactorSeries(k, eps),
                  1e-12);
    }
  }
}

TEST(Bounds, ZeroEpsilonCollapse) {
  for (std::size_t k = 1; k <= 50; ++k) {
    const double s = 1 - std::pow(1 - 1.0 / k, static_cast<double>(k));
    EXPECT_NEAR(bounds::submodularFactor(k), s, 1e-15);
    const auto cmp = bounds::compareMultiplicativeBounds(k, 0.0);
    EXPECT_NEAR(cmp.ours, s, 1e-12);
    EXPECT_NEAR(cmp.greedyKnown, s, 1e-12);
    EXPECT_TRUE(cmp.dominates);
    EXPECT_NEAR(bounds::ratioFactorFinite(1.0, k), s, 1e-12);
    EXPECT_NEAR(bounds::additiveThresholdFinite(k, 0.0, 3.0), 3.0 * s, 1e-12);
  }
  EXPECT_EQ(bounds::compareMultiplicativeBounds(1, 0.0).ours, 1.0);
}

TEST(Bounds, StatedForms) {
  EXPECT_NEAR(bounds::ratioFactor(1.0), 1 - std::exp(-1.0), 1e-15);
  EXPECT_NEAR(bounds::additiveThreshold(4, 0.05, 10.0), (1 - std::exp(-1.0)) * 9.8, 1e-12);
  EXPECT_NEAR(bounds::localOptimumFactor(1.0, 12), 1.0 / 3 - 1.0 / 12, 1e-15);
}

TEST(Bounds, GreedyForm) {
  const double k = 4;
  const double eps = 0.1;
  const double q = (1 - eps) / (1 + eps);
  const double expected =
      1 / (1 + 4 * k * eps / ((1 - eps) * (1 - eps))) * (1 - std::pow(1 - 1 / k, k) * std::pow(q, 2 * k));
  EXPECT_NEAR(bounds::multiplicativeGreedyFactor(4, eps), expected, 1e-15);
}

TEST(Bounds, DominanceSweep) {
  for (std::size_t k = 1; k <= 100; ++k) {
    for (int i = 1; i <= 50; ++i) {
      ASSERT_TRUE(bounds::compareMultiplicativeBounds(k, i / 100.0).dominates) << k << ' ' << i;
    }
  }
}

TEST(Bounds, DomainErrors) {
  EXPECT_THROW(bounds::compareMultiplicativeBounds(3, 1.0), std::domain_error);
  EXPECT_THROW(bounds::compareMultiplicativeBounds(0, 0.1), std::domain_error);
}

}  // namespace
}  // namespace gsemo::diagnostics
