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
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gsemo/core/errors.hpp"
#include "gsemo/diagnostics/report.hpp"
#include "gsemo/harness/builtin.hpp"
#include "gsemo/harness/diagnose.hpp"
#include "gsemo/harness/experiment.hpp"
#include "gsemo/harness/result_io.hpp"
#include "gsemo/harness/seeds.hpp"
#include "gsemo/harness/suites.hpp"
#include "gsemo/objectives/cut.hpp"
#include "gsemo/objectives/generators.hpp"
#include "gsemo/objectives/instance_io.hpp"
#include "gsemo/objectives/perturbed.hpp"

namespace gsemo::harness {
namespace {

namespace generate = objectives::generate;

TEST(Seeds, RangesAndLists) {
  EXPECT_EQ(parseSeeds("1..4"), (std::vector<std::uint64_t>{1, 2, 3, 4}));
  EXPECT_EQ(parseSeeds("7,3,9"), (std::vector<std::uint64_t>{7, 3, 9}));
  EXPECT_EQ(parseSeeds("1..2,5"), (std::vector<std::uint64_t>{1, 2, 5}));
}

TEST(Seeds, Rejections) {
  EXPECT_THROW(parseSeeds(""), ParseError);
  EXPECT_THROW(parseSeeds("1,1"), ParseError);
  EXPECT_THROW(parseSeeds("5..2"), ParseError);
  EXPECT_THROW(parseSeeds("x"), ParseError);
}

TEST(Aggregate, OddAndEvenMedians) {
  std::vector<SeedRecord> runs(3);
  runs[0].bestValue = 5;
  runs[1].bestValue = 1;
  runs[2].bestValue = 3;
  EXPECT_EQ(aggregate(runs), (Aggregate{1, 3, 5}));
  runs.push_back(runs[0]);
  runs.back().bestValue = 4;
  EXPECT_EQ(aggregate(runs), (Aggregate{1, 3.5, 5}));
}

TEST(Spec, Validation) {
  ExperimentSpec spec;
  spec.seeds.clear();
  EXPECT_THROW(validate(spec), GuardError);
  spec.seeds = {1};
  spec.budget = 0;
  EXPECT_THROW(validate(spec), GuardError);
  spec.budget = 10;
  spec.algorithm = Algorithm::Greedy;
  EXPECT_THROW(validate(spec), GuardError);
  EXPECT_THROW(parseAlgorithm("annealing"), ParseError);
  EXPECT_THROW(parseProblemKind("tsp"), ParseError);
}

ExperimentSpec cutSpec() {
  ExperimentSpec spec;
  spec.problem = ProblemKind::MaxCut;
  spec.input = "inline";
  spec.budget = 300;
  spec.seeds = parseSeeds("1..6");
  spec.computeOpt = true;
  spec.traceEvery = 50;
  return spec;
}

TEST(Experiment, ParallelEqualsSequential) {
  const objectives::CutFunction f(generate::randomGraph(10, 0.5, 4, 6));
  const ExperimentSpec spec = cutSpec();
  ExperimentOutcome seq = runExperiment(spec, f, 1);
  ExperimentOutcome par = runExperiment(spec, f, 4);
  ASSERT_EQ(seq.record.runs.size(), 6u);
  for (auto* o : {&seq, &par}) {
    for (auto& r : o->record.runs) r.wallMillis = 0.0;
  }
  EXPECT_EQ(seq.record, par.record);
  EXPECT_EQ(seq.traces, par.traces);
}

TEST(Experiment, RatiosAndAggregates) {
  const objectives::CutFunction f(generate::randomGraph(8, 0.5, 1, 2));
  const ExperimentOutcome out = runExperiment(cutSpec(), f, 1);
  ASSERT_TRUE(out.record.opt);
  for (const auto& r : out.record.runs) {
    ASSERT_TRUE(r.ratioToOpt);
    EXPECT_GE(*r.ratioToOpt, 0.0);
    EXPECT_LE(*r.ratioToOpt, 1.0 + 1e-9);
    EXPECT_EQ(r.oracleCalls, 1 + 2 * r.iterations);
    EXPECT_EQ(f.evaluate(SubsetSolution::fromBitString(r.bestSubset)), r.bestValue);
  }
  EXPECT_EQ(out.record.aggregate, aggregate(out.record.runs));
}

TEST(Experiment, DeterministicAlgorithmsIgnoreSeeds) {
  const objectives::CutFunction f(generate::randomGraph(8, 0.5, 1, 2));
  ExperimentSpec spec = cutSpec();
  spec.algorithm = Algorithm::DoubleGreedy;
  const ExperimentOutcome out = runExperiment(spec, f, 1);
  ASSERT_EQ(out.record.runs.size(), 1u);
  EXPECT_NE(out.record.note.find("seeds ignored"), std::string::npos);
  EXPECT_GT(out.record.runs[0].oracleCalls, 0u);
}

TEST(Experiment, KOutOfRangeIsAGuardError) {
  const objectives::CutFunction f(generate::triangle());
  ExperimentSpec spec = cutSpec();
  spec.k = 4;
  EXPECT_THROW(runExperiment(spec, f, 1), GuardError);
}

TEST(ResultIo, RoundTripIsExact) {
  const objectives::CutFunction f(generate::randomGraph(9, 0.5, 7, 3));
  ExperimentSpec spec = cutSpec();
  spec.epsilon = 0.1;
  spec.perturb = objectives::PerturbationMode::Multiplicative;
  spec.k = 4;
  spec.outputPath = "r.json";
  ResultRecord record = runExperiment(spec, f, 1).record;
  record.note = "tricky \"quoted\" note";
  record.runs[0].wallMillis = 0.1 + 0.2;
  std::stringstream s;
  writeResult(s, record);
  EXPECT_EQ(readResult(s), record);
}

TEST(ResultIo, RoundTripWithoutOptionals) {
  ResultRecord record;
  record.generator = "g";
  record.runs.push_back({3, 1.5, "0101", 7, 3, 2.25, std::nullopt});
  record.aggregate = aggregate(record.runs);
  std::stringstream s;
  writeResult(s, record);
  EXPECT_EQ(readResult(s), record);
}

TEST(ResultIo, MalformedDocuments) {
  std::istringstream notJson("{ nope");
  EXPECT_THROW(readResult(notJson), ParseError);
  std::istringstream missing(R"({"schema": "gsemo-result-v1"})");
  EXPECT_THROW(readResult(missing), ParseError);
  std::istringstream wrongSchema(R"({"schema": "other"})");
  EXPECT_THROW(readResult(wrongSchema), ParseError);
}

TEST(ResultIo, TraceCsvAndPaths) {
  std::ostringstream s;
  writeTraceCsv(s, {{0, std::nullopt, 1}, {10, 2.5, 3}});
  EXPECT_EQ(s.str(), "iteration,bestFeasibleValue,archiveOccupancy\n0,,1\n10,2.5,3\n");
  EXPECT_EQ(tracePathForSeed("out/t.csv", 7, true), std::filesystem::path("out/t.seed7.csv"));
  EXPECT_EQ(tracePathForSeed("out/t.csv", 7, false), std::filesystem::path("out/t.csv"));
}

TEST(LoadProblem, BadFileIsAParseError) {
  ExperimentSpec spec;
  spec.input = "/nonexistent/file.graph";
  EXPECT_THROW(loadProblem(spec), ParseError);
}

TEST(LoadProblem, PerturbedCoverage) {
  const auto path = std::filesystem::temp_directory_path() / "gsemo_harness_cov.txt";
  {
    std::ofstream out(path);
    generate::CoverageParams p;
    p.elements = 6;
    p.privateWeight = 1.0;
    objectives::writeCoverage(out, generate::randomCoverage(p, 3));
  }
  ExperimentSpec spec;
  spec.problem = ProblemKind::Perturbed;
  spec.input = path.string();
  spec.epsilon = 0.1;
  spec.perturb = objectives::PerturbationMode::Multiplicative;
  const auto f = loadProblem(spec);
  EXPECT_EQ(f->n(), 6u);
  std::filesystem::remove(path);
}

TEST(Diagnose, CoverageBoundsCollapse) {
  generate::CoverageParams p;
  const objectives::CoverageFunction f(generate::randomCoverage(p, 5));
  const auto j = diagnosticsJson(f, diagnostics::runDiagnostics(f, 3));
  EXPECT_NEAR(j["gammaMin"].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(j["bounds"]["ratio"]["factor"].get<double>(), 1 - std::exp(-1.0), 1e-4);
  EXPECT_NEAR(j["bounds"]["ratio"]["factor"].get<double>(), 0.6321, 1e-4);
  EXPECT_TRUE(j["bounds"]["suppressed"].is_null());
}

TEST(Diagnose, CutSuppressesConstrainedBounds) {
  const objectives::CutFunction f(generate::randomGraph(6, 0.5, 1, 4));
  const auto j = diagnosticsJson(f, diagnostics::runDiagnostics(f, 2));
  EXPECT_EQ(j["properties"]["monotone"]["verdict"], "fail");
  EXPECT_TRUE(j["bounds"]["suppressed"].is_string());
  EXPECT_FALSE(j["bounds"].contains("ratio"));
}

TEST(Diagnose, MultiplicativeBoundReported) {
  const auto f = builtin::perturbedCoverage(8, objectives::PerturbationMode::Multiplicative, 0.05,
                                            968, 10.0);
  const auto j = diagnosticsJson(*f, diagnostics::runDiagnostics(*f, 3));
  ASSERT_TRUE(j["bounds"].contains("multiplicative"));
  EXPECT_GE(j["bounds"]["multiplicative"]["factor"].get<double>(),
            j["bounds"]["multiplicative"]["greedyFactor"].get<double>());
}

TEST(Suites, NamesAndBudgets) {
  EXPECT_EQ(suiteCriteria("theorem4"), (std::vector<int>{4, 8}));
  EXPECT_EQ(suiteCriteria("all").size(), 10u);
  EXPECT_THROW(suiteCriteria("nope"), ParseError);
  EXPECT_EQ(unconstrainedBudget(12, 1.0),
            static_cast<std::uint64_t>(std::ceil(10.0 * 20736 * std::log(12.0))));
  EXPECT_EQ(constrainedBudget(12, 4),
            static_cast<std::uint64_t>(std::ceil(20.0 * 144 * (std::log(12.0) + 4))));
}

TEST(Suites, CoreSuitePasses) {
  const SuiteReport r = runSuite("core");
  ASSERT_EQ(r.criteria.size(), 1u);
  EXPECT_TRUE(r.passed()) << formatCriterion(r.criteria[0]);
}

}  // namespace
}  // namespace gsemo::harness
