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

#include "gsemo/harness/suites.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>

#include "gsemo/baselines/double_greedy.hpp"
#include "gsemo/baselines/greedy.hpp"
#include "gsemo/baselines/local_search.hpp"
#include "gsemo/core/archive.hpp"
#include "gsemo/core/errors.hpp"
#include "gsemo/core/random.hpp"
#include "gsemo/diagnostics/additive_epsilon.hpp"
#include "gsemo/diagnostics/bounds.hpp"
#include "gsemo/diagnostics/brute_force.hpp"
#include "gsemo/diagnostics/certify.hpp"
#include "gsemo/diagnostics/enumeration.hpp"
#include "gsemo/diagnostics/submodularity_ratio.hpp"
#include "gsemo/engines/gsemo.hpp"
#include "gsemo/engines/mutation.hpp"
#include "gsemo/harness/builtin.hpp"
#include "gsemo/objectives/perturbed.hpp"
#include "gsemo/objectives/tabulated.hpp"

namespace gsemo::harness {

namespace bounds = diagnostics::bounds;
using objectives::PerturbationMode;
using objectives::SetFunction;

namespace {

std::ostringstream detailStream() {
  std::ostringstream s;
  s << std::setprecision(6);
  return s;
}

CriterionResult titled(int id, std::string title) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  return r;
}

std::vector<double> tableOf(const SetFunction& f) { return diagnostics::tabulate(f); }

double constrainedOpt(const std::vector<double>& table, std::size_t k) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::uint64_t m = 0; m < table.size(); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) <= k) best = std::max(best, table[m]);
  }
  return best;
}

struct SeedCount {
  int met = 0;
  double worst = std::numeric_limits<double>::infinity();
};

// GSEMO on seeds 1..kSuiteSeeds; a seed counts when its best solution is
// feasible and reaches the threshold.
SeedCount countSeeds(const SetFunction& f, SizeBound k, std::uint64_t budget, double threshold) {
  SeedCount c;
  for (int seed = 1; seed <= kSuiteSeeds; ++seed) {
    engines::RunConfig config;
    config.seed = static_cast<std::uint64_t>(seed);
    config.maxIterations = budget;
    config.constraintK = k;
    config.recordTraceEvery = budget;
    const engines::RunResult r = engines::gsemoRun(f, config);
    const bool feasible = !k || r.best.size() <= *k;
    if (feasible && r.bestValue >= threshold - kThresholdSlack) ++c.met;
    c.worst = std::min(c.worst, r.bestValue);
  }
  return c;
}

CriterionResult statistical(int id, std::string title, const SetFunction& f, std::size_t k,
                            double epsilon, const std::function<double(double)>& threshold) {
  CriterionResult r = titled(id, std::move(title));
  const double opt = diagnostics::bruteForceOpt(f, k).value;
  const double thr = threshold(opt);
  const std::uint64_t budget = constrainedBudget(f.n(), k);
  const SeedCount c = countSeeds(f, k, budget, thr);
  r.passed = c.met >= kSuiteRequired;
  auto d = detailStream();
  d << f.name() << " n=" << f.n() << " k=" << k << " eps=" << epsilon << " budget=" << budget
    << " OPT=" << opt << " threshold=" << thr << " worst=" << c.worst << " seeds " << c.met << '/'
    << kSuiteSeeds;
  r.detail = d.str();
  return r;
}

CriterionResult maxCutLocalOptimum() {
  CriterionResult r = titled(1, "unconstrained cut guarantee");
  constexpr double eps = 1.0;
  r.passed = true;
  auto d = detailStream();
  for (const auto& [name, f] : builtin::maxCutGraphs12()) {
    const double opt = diagnostics::bruteForceOpt(*f, kUnbounded).value;
    const double thr = bounds::localOptimumFactor(eps, f->n()) * opt;
    const std::uint64_t budget = unconstrainedBudget(f->n(), eps);
    const SeedCount c = countSeeds(*f, kUnbounded, budget, thr);
    r.passed = r.passed && c.met >= kSuiteRequired;
    d << name << ": OPT=" << opt << " threshold=" << thr << " worst=" << c.worst << " seeds "
      << c.met << '/' << kSuiteSeeds << "; ";
  }
  d << "budget=" << unconstrainedBudget(12, eps);
  r.detail = d.str();
  return r;
}

CriterionResult additiveGuarantee() {
  constexpr std::size_t k = 4;
  constexpr double eps = 0.05;
  const auto f = builtin::perturbedCoverage(12, PerturbationMode::Additive, eps, 21);
  return statistical(2, "additive approximate submodularity guarantee", *f, k, eps,
                     [&](double opt) { return bounds::additiveThreshold(k, eps, opt); });
}

CriterionResult ratioGuarantee() {
  constexpr std::size_t k = 3;
  const auto f = builtin::regression(40, 10, 31);
  const double gamma = diagnostics::gammaMin(*f, k);
  CriterionResult r =
      statistical(3, "submodularity ratio guarantee", *f, k, 0.0,
                  [&](double opt) { return bounds::ratioFactor(gamma) * opt; });
  auto d = detailStream();
  d << " gammaMin=" << gamma;
  r.detail += d.str();
  return r;
}

// Largest violation of (1-eps) g <= f <= (1+eps) g over all subsets.
double bracketViolation(const objectives::PerturbedFunction& f) {
  const std::vector<double> ft = tableOf(f);
  const std::vector<double> gt = tableOf(f.witness());
  const double eps = f.spec().epsilon;
  double worst = 0.0;
  for (std::size_t m = 0; m < ft.size(); ++m) {
    worst = std::max({worst, (1 - eps) * gt[m] - ft[m], ft[m] - (1 + eps) * gt[m]});
  }
  return worst;
}

CriterionResult multiplicativeGuarantee() {
  constexpr std::size_t k = 4;
  constexpr double eps = 0.05;
  const auto f = builtin::perturbedCoverage(12, PerturbationMode::Multiplicative, eps, 41, 10.0);
  const auto& p = dynamic_cast<const objectives::PerturbedFunction&>(*f);
  const double bracket = bracketViolation(p);
  CriterionResult r =
      statistical(4, "multiplicative approximate submodularity guarantee", *f, k, eps,
                  [&](double opt) { return bounds::multiplicativeFactor(k, eps) * opt; });
  const bool witnessOk = bracket <= kThresholdSlack &&
                         diagnostics::certifyProperties(p.witness()).submodular.verdict ==
                             diagnostics::Verdict::Pass;
  r.passed = r.passed && witnessOk;
  auto d = detailStream();
  d << " witness " << (witnessOk ? "ok" : "FAILED") << " f monotone "
    << (f->declaredMonotone() ? "yes" : "no");
  r.detail += d.str();
  return r;
}

CriterionResult localSearchGuarantee() {
  CriterionResult r = titled(5, "approximate local optimum guarantee");
  int checked = 0;
  int held = 0;
  double worstMargin = std::numeric_limits<double>::infinity();
  std::string firstFailure;
  for (double eps : {0.5, 1.0}) {
    for (const auto& [name, f] : builtin::nonNegativeSubmodular(12)) {
      const double opt = diagnostics::bruteForceOpt(*f, kUnbounded).value;
      baselines::LocalSearchConfig config;
      config.epsilon = eps;
      const auto ls = baselines::approximateLocalSearch(*f, config);
      const double value =
          std::max(f->evaluate(ls.localOptimum), f->evaluate(ls.localOptimum.complement()));
      const double margin = value - bounds::localOptimumFactor(eps, f->n()) * opt;
      const bool ok = !ls.truncated &&
                      baselines::isApproximateLocalOptimum(*f, ls.localOptimum, eps) &&
                      margin >= -kThresholdSlack;
      ++checked;
      if (ok) {
        ++held;
      } else if (firstFailure.empty()) {
        firstFailure = name + " eps=" + std::to_string(eps);
      }
      worstMargin = std::min(worstMargin, margin / std::max(opt, 1.0));
    }
  }
  r.passed = held == checked;
  auto d = detailStream();
  d << held << '/' << checked << " instance/eps pairs hold; smallest relative margin "
    << worstMargin;
  if (!firstFailure.empty()) d << "; first failure " << firstFailure;
  r.detail = d.str();
  return r;
}

struct ElementCheck {
  std::uint64_t checked = 0;
  std::uint64_t held = 0;
  double worstSlack = std::numeric_limits<double>::infinity();
};

// For every x != V: max over v outside x of gain(x, v) >= need(x).
void checkImprovingElement(std::size_t n, const std::vector<double>& table,
                           const std::function<double(std::uint64_t, std::uint64_t)>& gain,
                           const std::function<double(std::uint64_t)>& need, ElementCheck& out) {
  const std::uint64_t full = table.size() - 1;
  for (std::uint64_t x = 0; x < full; ++x) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (!(x & bit)) best = std::max(best, gain(x, x | bit));
    }
    const double slack = best - need(x);
    ++out.checked;
    if (slack >= -kThresholdSlack) ++out.held;
    out.worstSlack = std::min(out.worstSlack, slack);
  }
}

CriterionResult improvingElementChecks() {
  CriterionResult r = titled(6, "improving element inequalities");
  constexpr std::size_t kMax = 4;
  ElementCheck ratio;
  ElementCheck additive;
  ElementCheck multiplicative;
  bool premisesOk = true;

  std::vector<builtin::NamedFunction> monotone = builtin::monotoneSubmodular(8);
  monotone.push_back({"regression-n6", builtin::regression(24, 6, 806)});
  monotone.push_back({"regression-n8", builtin::regression(32, 8, 808)});
  monotone.push_back(
      {"coverage-additive-n8", builtin::perturbedCoverage(8, PerturbationMode::Additive, 0.1, 908)});
  for (const auto& [name, f] : monotone) {
    const std::size_t n = f->n();
    const std::vector<double> t = tableOf(*f);
    premisesOk = premisesOk && objectives::isMonotoneExhaustive(*f);
    const objectives::TabulatedFunction tf(n, t, true, true);
    for (std::size_t k = 1; k <= std::min(kMax, n); ++k) {
      const double opt = constrainedOpt(t, k);
      checkImprovingElement(
          n, t, [&](std::uint64_t x, std::uint64_t xv) { return t[xv] - t[x]; },
          [&](std::uint64_t x) {
            const double g = diagnostics::submodularityRatio(tf, SubsetSolution::fromMask(n, x), k);
            return g / static_cast<double>(k) * (opt - t[x]);
          },
          ratio);
    }
  }

  for (std::size_t n : {6u, 8u}) {
    for (double eps : {0.05, 0.1}) {
      const auto f = builtin::perturbedCoverage(n, PerturbationMode::Additive, eps, 910 + n);
      const std::vector<double> t = tableOf(*f);
      const double measured = diagnostics::minimalAdditiveEpsilon(*f);
      premisesOk = premisesOk && measured <= eps + kThresholdSlack;
      for (std::size_t k = 1; k <= kMax; ++k) {
        const double opt = constrainedOpt(t, k);
        checkImprovingElement(
            n, t, [&](std::uint64_t x, std::uint64_t xv) { return t[xv] - t[x]; },
            [&](std::uint64_t x) { return (opt - t[x]) / static_cast<double>(k) - measured; },
            additive);
      }
    }
  }

  for (std::size_t n : {6u, 8u}) {
    constexpr double eps = 0.05;
    const auto f =
        builtin::perturbedCoverage(n, PerturbationMode::Multiplicative, eps, 960 + n, 10.0);
    const auto& p = dynamic_cast<const objectives::PerturbedFunction&>(*f);
    premisesOk = premisesOk && f->declaredMonotone() && bracketViolation(p) <= kThresholdSlack;
    const std::vector<double> t = tableOf(*f);
    const double ratioEps = (1 - eps) / (1 + eps);
    for (std::size_t k = 1; k <= kMax; ++k) {
      const double opt = constrainedOpt(t, k);
      checkImprovingElement(
          n, t, [&](std::uint64_t x, std::uint64_t xv) { return t[xv] - ratioEps * t[x]; },
          [&](std::uint64_t x) { return ratioEps / static_cast<double>(k) * (opt - t[x]); },
          multiplicative);
    }
  }

  r.passed = premisesOk && ratio.held == ratio.checked && additive.held == additive.checked &&
             multiplicative.held == multiplicative.checked;
  auto d = detailStream();
  d << "ratio " << ratio.held << '/' << ratio.checked << " (min slack " << ratio.worstSlack
    << "); additive " << additive.held << '/' << additive.checked << " (min slack "
    << additive.worstSlack << "); multiplicative " << multiplicative.held << '/'
    << multiplicative.checked << " (min slack " << multiplicative.worstSlack << "); premises "
    << (premisesOk ? "ok" : "FAILED");
  r.detail = d.str();
  return r;
}

CriterionResult submodularCollapse() {
  CriterionResult r = titled(7, "collapse to the submodular guarantee");
  constexpr std::size_t kAllPairsLimit = 8;
  constexpr std::size_t kGammaMinK = 4;
  int oracles = 0;
  std::uint64_t ratios = 0;
  double worstGamma = 0.0;
  double worstEps = 0.0;
  double worstBound = 0.0;
  for (const auto& [name, f] : builtin::everything(12)) {
    const auto flags = diagnostics::certifyProperties(*f);
    if (flags.submodular.verdict != diagnostics::Verdict::Pass) continue;
    ++oracles;
    const std::size_t n = f->n();
    const std::vector<double> t = tableOf(*f);
    const objectives::TabulatedFunction tf(n, t, false, false);
    worstEps = std::max(worstEps, std::abs(diagnostics::minimalAdditiveEpsilon(tf)));

    std::vector<double> gammaAtK(n + 1, 1.0);
    for (std::size_t k = 1; k <= n; ++k) {
      if (n <= kAllPairsLimit) {
        for (std::uint64_t u = 0; u < t.size(); ++u) {
          const double g = diagnostics::submodularityRatio(tf, SubsetSolution::fromMask(n, u), k);
          worstGamma = std::max(worstGamma, std::abs(g - 1.0));
          ++ratios;
        }
      } else if (k <= kGammaMinK) {
        gammaAtK[k] = diagnostics::gammaMin(tf, k);
        worstGamma = std::max(worstGamma, std::abs(gammaAtK[k] - 1.0));
        ++ratios;
      }
      const double target = bounds::submodularFactor(k);
      const double opt = constrainedOpt(t, k);
      const double additive =
          opt > 0.0 ? bounds::additiveThresholdFinite(k, 0.0, opt) / opt : target;
      worstBound = std::max({worstBound, std::abs(bounds::ratioFactorFinite(gammaAtK[k], k) - target),
                             std::abs(additive - target),
                             std::abs(bounds::multiplicativeFactor(k, 0.0) - target),
                             std::abs(bounds::multiplicativeFactorSeries(k, 0.0) - target)});
    }
  }
  r.passed = oracles > 0 && worstGamma <= 1e-9 && worstEps <= 1e-12 && worstBound <= 1e-9;
  auto d = detailStream();
  d << oracles << " certified oracles, " << ratios << " ratio evaluations; max |gamma-1|="
    << worstGamma << " max eps=" << worstEps << " max bound deviation=" << worstBound;
  r.detail = d.str();
  return r;
}

CriterionResult boundDominance() {
  CriterionResult r = titled(8, "multiplicative bound dominance");
  int checked = 0;
  int dominated = 0;
  double smallestGap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k <= 100; ++k) {
    for (int i = 1; i <= 50; ++i) {
      const auto cmp = bounds::compareMultiplicativeBounds(k, i / 100.0);
      ++checked;
      if (cmp.dominates) ++dominated;
      smallestGap = std::min(smallestGap, cmp.ours - cmp.greedyKnown);
    }
  }
  r.passed = dominated == checked;
  auto d = detailStream();
  d << dominated << '/' << checked << " (k, eps) pairs dominate; smallest gap " << smallestGap;
  r.detail = d.str();
  return r;
}

CriterionResult baselineGuarantees() {
  CriterionResult r = titled(9, "baseline guarantees");
  int greedyChecked = 0;
  int greedyHeld = 0;
  for (const auto& [name, f] : builtin::monotoneSubmodular(10)) {
    const std::vector<double> t = tableOf(*f);
    for (std::size_t k = 1; k <= f->n(); ++k) {
      const double opt = constrainedOpt(t, k);
      const SubsetSolution x = baselines::standardGreedy(*f, k);
      ++greedyChecked;
      if (x.size() <= k && *x.cachedValue() >= (1 - std::exp(-1.0)) * opt - kThresholdSlack) {
        ++greedyHeld;
      }
    }
  }
  int doubleChecked = 0;
  int doubleHeld = 0;
  for (const auto& [name, f] : builtin::nonNegativeSubmodular(12)) {
    const double opt = diagnostics::bruteForceOpt(*f, kUnbounded).value;
    const SubsetSolution x = baselines::doubleGreedy(*f);
    ++doubleChecked;
    if (*x.cachedValue() >= opt / 3.0 - kThresholdSlack) ++doubleHeld;
  }
  r.passed = greedyHeld == greedyChecked && doubleHeld == doubleChecked;
  auto d = detailStream();
  d << "greedy " << greedyHeld << '/' << greedyChecked << " (instance, k) pairs; double greedy "
    << doubleHeld << '/' << doubleChecked << " instances";
  r.detail = d.str();
  return r;
}

CriterionResult structuralInvariants() {
  CriterionResult r = titled(10, "structural invariants");
  constexpr std::size_t n = 10;
  constexpr int kUpdates = 100'000;
  constexpr int kRuns = 100;

  int archiveFailures = 0;
  {
    Rng rng(20260, 99);
    ParetoArchive archive(n);
    bool emptySeen = false;
    for (int i = 0; i < kUpdates; ++i) {
      const SubsetSolution y = i % 50 == 0 ? SubsetSolution(n) : engines::randomSolution(n, rng);
      archive.update(y, static_cast<double>(rng.uniformIndex(16)));
      emptySeen = emptySeen || y.empty();
      const bool ok = archive.invariantsHold() && archive.occupancy() <= n + 1 &&
                      (!emptySeen || archive.slot(0).has_value());
      if (!ok) ++archiveFailures;
    }
  }

  int runFailures = 0;
  const auto pool = builtin::everything(10);
  for (int i = 0; i < kRuns; ++i) {
    const auto& f = pool[static_cast<std::size_t>(i) % pool.size()].f;
    engines::RunConfig config;
    config.seed = static_cast<std::uint64_t>(1000 + i);
    config.maxIterations = 400;
    config.recordTraceEvery = 50;
    if (f->declaredMonotone()) config.constraintK = f->n() / 2;
    bool ok = true;
    bool emptySeen = false;
    objectives::CallCountingFunction counted(*f);
    const auto observe = [&](std::uint64_t, const ParetoArchive& a) {
      emptySeen = emptySeen || a.slot(0).has_value();
      ok = ok && a.invariantsHold() && a.occupancy() <= f->n() + 1 &&
           (!emptySeen || a.slot(0).has_value());
    };
    const engines::RunResult first = engines::gsemoRun(counted, config, observe);
    const engines::RunResult again = engines::gsemoRun(*f, config);
    ok = ok && first.oracleCalls == 1 + 2 * first.iterations &&
         counted.calls() == first.oracleCalls && first == again;
    if (!ok) ++runFailures;
  }

  r.passed = archiveFailures == 0 && runFailures == 0;
  auto d = detailStream();
  d << kUpdates << " archive updates with " << archiveFailures << " violations; " << kRuns
    << " runs with " << runFailures << " violations";
  r.detail = d.str();
  return r;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(criteria.begin(), criteria.end(),
                     [](const CriterionResult& c) { return c.passed; });
}

std::uint64_t unconstrainedBudget(std::size_t n, double epsilon) {
  const double nn = static_cast<double>(n);
  return static_cast<std::uint64_t>(std::ceil(10.0 / epsilon * std::pow(nn, 4) * std::log(nn)));
}

std::uint64_t constrainedBudget(std::size_t n, std::size_t k) {
  const double nn = static_cast<double>(n);
  return static_cast<std::uint64_t>(
      std::ceil(20.0 * nn * nn * (std::log(nn) + static_cast<double>(k))));
}

std::vector<std::string_view> suiteNames() {
  return {"core", "theorem1", "theorem2", "theorem3", "theorem4",
          "lemmas", "baselines", "collapse", "all"};
}

std::vector<int> suiteCriteria(std::string_view suite) {
  if (suite == "core") return {10};
  if (suite == "theorem1") return {1};
  if (suite == "theorem2") return {2};
  if (suite == "theorem3") return {3};
  if (suite == "theorem4") return {4, 8};
  if (suite == "lemmas") return {5, 6};
  if (suite == "baselines") return {9};
  if (suite == "collapse") return {7};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  throw ParseError("unknown suite '" + std::string(suite) + "'");
}

CriterionResult runCriterion(int id) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = maxCutLocalOptimum(); break;
    case 2: r = additiveGuarantee(); break;
    case 3: r = ratioGuarantee(); break;
    case 4: r = multiplicativeGuarantee(); break;
    case 5: r = localSearchGuarantee(); break;
    case 6: r = improvingElementChecks(); break;
    case 7: r = submodularCollapse(); break;
    case 8: r = boundDominance(); break;
    case 9: r = baselineGuarantees(); break;
    case 10: r = structuralInvariants(); break;
    default: throw GuardError("no acceptance criterion " + std::to_string(id));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SuiteReport runSuite(std::string_view suite) {
  SuiteReport report{std::string(suite), {}};
  for (int id : suiteCriteria(suite)) report.criteria.push_back(runCriterion(id));
  return report;
}

std::string formatCriterion(const CriterionResult& c) {
  std::ostringstream s;
  s << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.title << ": " << c.detail << " ("
    << std::fixed << std::setprecision(1) << c.seconds << " s)";
  return s.str();
}

}  // namespace gsemo::harness
