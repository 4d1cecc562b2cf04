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

#include "gsemo/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>

#include "gsemo/baselines/double_greedy.hpp"
#include "gsemo/baselines/greedy.hpp"
#include "gsemo/baselines/local_search.hpp"
#include "gsemo/core/errors.hpp"
#include "gsemo/core/random.hpp"
#include "gsemo/diagnostics/brute_force.hpp"
#include "gsemo/engines/gsemo.hpp"
#include "gsemo/engines/one_plus_one.hpp"
#include "gsemo/objectives/coverage.hpp"
#include "gsemo/objectives/cut.hpp"
#include "gsemo/objectives/facility_location.hpp"
#include "gsemo/objectives/instance_io.hpp"
#include "gsemo/objectives/regression.hpp"

namespace gsemo::harness {

std::string_view toString(ProblemKind p) {
  switch (p) {
    case ProblemKind::MaxCut: return "maxcut";
    case ProblemKind::Coverage: return "coverage";
    case ProblemKind::Facility: return "facility";
    case ProblemKind::Regression: return "regression";
    case ProblemKind::Perturbed: return "perturbed";
  }
  return "?";
}

std::string_view toString(Algorithm a) {
  switch (a) {
    case Algorithm::Gsemo: return "gsemo";
    case Algorithm::OnePlusOne: return "oneplusone";
    case Algorithm::Greedy: return "greedy";
    case Algorithm::DoubleGreedy: return "doublegreedy";
    case Algorithm::LocalSearch: return "localsearch";
  }
  return "?";
}

ProblemKind parseProblemKind(std::string_view text) {
  for (auto p : {ProblemKind::MaxCut, ProblemKind::Coverage, ProblemKind::Facility,
                 ProblemKind::Regression, ProblemKind::Perturbed}) {
    if (toString(p) == text) return p;
  }
  throw ParseError("unknown problem '" + std::string(text) + "'");
}

Algorithm parseAlgorithm(std::string_view text) {
  for (auto a : {Algorithm::Gsemo, Algorithm::OnePlusOne, Algorithm::Greedy,
                 Algorithm::DoubleGreedy, Algorithm::LocalSearch}) {
    if (toString(a) == text) return a;
  }
  throw ParseError("unknown algorithm '" + std::string(text) + "'");
}

bool isDeterministic(Algorithm a) {
  return a == Algorithm::Greedy || a == Algorithm::DoubleGreedy || a == Algorithm::LocalSearch;
}

Aggregate aggregate(const std::vector<SeedRecord>& runs) {
  if (runs.empty()) return {};
  std::vector<double> v;
  v.reserve(runs.size());
  for (const auto& r : runs) v.push_back(r.bestValue);
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  const double median = v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
  return {v.front(), median, v.back()};
}

void validate(const ExperimentSpec& spec) {
  if (spec.seeds.empty()) throw GuardError("at least one seed is required");
  if (spec.budget < 1) throw GuardError("budget must be >= 1");
  if (spec.traceEvery < 1) throw GuardError("trace stride must be >= 1");
  if (spec.algorithm == Algorithm::Greedy && !spec.k) throw GuardError("greedy requires --k");
  if (spec.epsilon && !(*spec.epsilon >= 0.0)) throw GuardError("epsilon must be >= 0");
  if (spec.algorithm == Algorithm::LocalSearch && spec.epsilon && *spec.epsilon <= 0.0) {
    throw GuardError("local search epsilon must be > 0");
  }
  if (spec.problem == ProblemKind::Perturbed && !spec.epsilon) {
    throw GuardError("perturbed problems require --epsilon");
  }
}

objectives::SetFunctionPtr loadProblem(const ExperimentSpec& spec) {
  using namespace objectives;
  if (spec.input.empty()) throw ParseError("an instance file (--input) is required");
  auto guarded = [](auto make) -> SetFunctionPtr {
    try {
      return make();
    } catch (const std::invalid_argument& e) {
      throw GuardError(e.what());
    }
  };
  switch (spec.problem) {
    case ProblemKind::MaxCut: {
      auto g = loadGraph(spec.input);
      return std::make_shared<CutFunction>(std::move(g));
    }
    case ProblemKind::Coverage: {
      auto inst = loadCoverage(spec.input);
      return guarded([&] { return std::make_shared<CoverageFunction>(std::move(inst)); });
    }
    case ProblemKind::Facility: {
      auto inst = loadFacility(spec.input);
      return guarded([&] { return std::make_shared<FacilityLocationFunction>(std::move(inst)); });
    }
    case ProblemKind::Regression: {
      auto inst = loadRegressionCsv(spec.input, spec.csvHeader);
      return guarded([&] { return std::make_shared<RegressionR2Function>(std::move(inst)); });
    }
    case ProblemKind::Perturbed: {
      auto inst = loadCoverage(spec.input);
      const PerturbationSpec p{spec.perturb.value_or(PerturbationMode::Additive),
                               spec.epsilon.value_or(0.0), spec.perturbSeed};
      return guarded([&] {
        return std::make_shared<PerturbedFunction>(
            std::make_shared<CoverageFunction>(std::move(inst)), p);
      });
    }
  }
  throw ParseError("unsupported problem kind");
}

SeedOutcome runSeed(const objectives::SetFunction& f, const ExperimentSpec& spec,
                    std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  SeedOutcome out;
  SeedRecord& rec = out.record;
  rec.seed = seed;

  if (spec.algorithm == Algorithm::Gsemo || spec.algorithm == Algorithm::OnePlusOne) {
    engines::RunConfig config;
    config.seed = seed;
    config.maxIterations = spec.budget;
    config.constraintK = spec.k;
    config.recordTraceEvery = spec.traceEvery;
    engines::RunResult r = spec.algorithm == Algorithm::Gsemo ? engines::gsemoRun(f, config)
                                                              : engines::onePlusOneEaRun(f, config);
    rec.bestValue = r.bestValue;
    rec.bestSubset = r.best.toBitString();
    rec.oracleCalls = r.oracleCalls;
    rec.iterations = r.iterations;
    out.trace = std::move(r.trace);
  } else {
    objectives::CallCountingFunction counted(f);
    SubsetSolution best;
    switch (spec.algorithm) {
      case Algorithm::Greedy:
        if (*spec.k > f.n()) throw GuardError("k exceeds the ground set size");
        best = baselines::standardGreedy(counted, *spec.k);
        break;
      case Algorithm::DoubleGreedy:
        best = baselines::doubleGreedy(counted);
        break;
      default: {
        baselines::LocalSearchConfig config;
        config.epsilon = spec.epsilon.value_or(1.0);
        best = baselines::approximateLocalSearch(counted, config).solution;
        break;
      }
    }
    rec.bestValue = *best.cachedValue();
    rec.bestSubset = best.toBitString();
    rec.oracleCalls = counted.calls();
  }
  rec.wallMillis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

ExperimentOutcome runExperiment(const ExperimentSpec& spec, const objectives::SetFunction& f,
                                unsigned threads) {
  validate(spec);
  if (spec.k && (*spec.k < 1 || *spec.k > f.n())) {
    throw GuardError("k must satisfy 1 <= k <= n = " + std::to_string(f.n()));
  }
  ExperimentOutcome outcome;
  ResultRecord& result = outcome.record;
  result.spec = spec;
  result.generator = std::string(Rng::kName);

  if (spec.computeOpt) {
    const SizeBound bound = spec.algorithm == Algorithm::DoubleGreedy ||
                                    spec.algorithm == Algorithm::LocalSearch
                                ? kUnbounded
                                : spec.k;
    result.opt = diagnostics::bruteForceOpt(f, bound, spec.guardOverride).value;
  }

  const std::vector<std::uint64_t> seeds =
      isDeterministic(spec.algorithm) ? std::vector<std::uint64_t>{0} : spec.seeds;
  if (isDeterministic(spec.algorithm)) {
    result.note = "seeds ignored: " + std::string(toString(spec.algorithm)) + " is deterministic";
  }

  std::vector<SeedOutcome> outcomes(seeds.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, seeds.size()));
  std::atomic<std::size_t> nextIndex{0};
  std::exception_ptr failure;
  std::mutex failureMutex;
  auto worker = [&] {
    for (std::size_t i; (i = nextIndex++) < seeds.size();) {
      try {
        outcomes[i] = runSeed(f, spec, seeds[i]);
      } catch (...) {
        const std::lock_guard lock(failureMutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& o : outcomes) {
    if (result.opt && *result.opt > 0.0) o.record.ratioToOpt = o.record.bestValue / *result.opt;
    result.runs.push_back(o.record);
    if (!isDeterministic(spec.algorithm)) outcome.traces.push_back(std::move(o.trace));
  }
  result.aggregate = aggregate(result.runs);
  return outcome;
}

}  // namespace gsemo::harness
