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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsemo/engines/run.hpp"
#include "gsemo/objectives/perturbed.hpp"
#include "gsemo/objectives/set_function.hpp"

namespace gsemo::harness {

enum class ProblemKind { MaxCut, Coverage, Facility, Regression, Perturbed };
enum class Algorithm { Gsemo, OnePlusOne, Greedy, DoubleGreedy, LocalSearch };

std::string_view toString(ProblemKind p);
std::string_view toString(Algorithm a);
ProblemKind parseProblemKind(std::string_view text);
Algorithm parseAlgorithm(std::string_view text);
/// Greedy, double greedy and local search ignore seeds.
bool isDeterministic(Algorithm a);

struct ExperimentSpec {
  ProblemKind problem = ProblemKind::MaxCut;
  std::string input;
  bool csvHeader = false;
  Algorithm algorithm = Algorithm::Gsemo;
  SizeBound k = kUnbounded;
  std::uint64_t budget = 1000;
  std::vector<std::uint64_t> seeds{1};
  /// Local-search eps, or the perturbation eps for ProblemKind::Perturbed.
  std::optional<double> epsilon;
  std::optional<objectives::PerturbationMode> perturb;
  std::uint64_t perturbSeed = 0;
  std::uint64_t traceEvery = 1000;
  /// Brute-force OPT and per-seed ratios (small n only).
  bool computeOpt = false;
  bool guardOverride = false;
  std::string outputPath;
  std::string tracePath;

  friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

struct SeedRecord {
  std::uint64_t seed = 0;
  double bestValue = 0.0;
  std::string bestSubset;
  std::uint64_t oracleCalls = 0;
  std::uint64_t iterations = 0;
  double wallMillis = 0.0;
  std::optional<double> ratioToOpt;

  friend bool operator==(const SeedRecord&, const SeedRecord&) = default;
};

struct Aggregate {
  double min = 0.0;
  double median = 0.0;
  double max = 0.0;

  friend bool operator==(const Aggregate&, const Aggregate&) = default;
};

struct ResultRecord {
  ExperimentSpec spec;
  std::string generator;
  std::string note;
  std::vector<SeedRecord> runs;
  Aggregate aggregate;
  std::optional<double> opt;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

struct SeedOutcome {
  SeedRecord record;
  std::vector<engines::TraceRecord> trace;
};

struct ExperimentOutcome {
  ResultRecord record;
  /// One trace per seed, in seed order (empty for deterministic algorithms).
  std::vector<std::vector<engines::TraceRecord>> traces;
};

/// Median of the per-seed best values (mean of the middle pair when even).
Aggregate aggregate(const std::vector<SeedRecord>& runs);

/// Builds the objective for a spec from its instance file. Throws ParseError
/// for unreadable instances and GuardError for out-of-range parameters.
objectives::SetFunctionPtr loadProblem(const ExperimentSpec& spec);

/// Checks ranges that do not depend on the instance.
void validate(const ExperimentSpec& spec);

/// Runs one seed of the spec's algorithm on f.
SeedOutcome runSeed(const objectives::SetFunction& f, const ExperimentSpec& spec,
                    std::uint64_t seed);

/// Runs every seed (on up to `threads` worker threads; 0 = hardware
/// concurrency). Per-seed records do not depend on the thread count apart
/// from wallMillis.
ExperimentOutcome runExperiment(const ExperimentSpec& spec, const objectives::SetFunction& f,
                                unsigned threads = 0);

}  // namespace gsemo::harness
