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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gsemo/core/errors.hpp"
#include "gsemo/diagnostics/brute_force.hpp"
#include "gsemo/diagnostics/report.hpp"
#include "gsemo/harness/diagnose.hpp"
#include "gsemo/harness/experiment.hpp"
#include "gsemo/harness/result_io.hpp"
#include "gsemo/harness/seeds.hpp"
#include "gsemo/harness/suites.hpp"

namespace gsemo::cli {
namespace {

using harness::ExperimentSpec;

struct ProblemFlags {
  std::string problem;
  std::string input;
  bool csvHeader = false;
  std::optional<std::size_t> k;
  std::optional<double> epsilon;
  std::string perturb;
  std::uint64_t perturbSeed = 0;
  bool guardOverride = false;
  std::string out;
};

void addProblemFlags(CLI::App* cmd, ProblemFlags& p) {
  cmd->add_option("--problem", p.problem, "maxcut | coverage | facility | regression | perturbed")
      ->required();
  cmd->add_option("--input", p.input, "Instance file")->required();
  cmd->add_flag("--csv-header", p.csvHeader, "Regression CSV starts with a header row");
  cmd->add_option("--k", p.k, "Size constraint");
  cmd->add_option("--epsilon", p.epsilon, "Local-search or perturbation epsilon");
  cmd->add_option("--perturb", p.perturb, "additive | multiplicative (perturbed problems)");
  cmd->add_option("--perturb-seed", p.perturbSeed, "Noise seed of a perturbed problem");
  cmd->add_flag("--guard-override", p.guardOverride, "Raise the brute-force size limit");
  cmd->add_option("--out", p.out, "Output file (stdout when omitted)");
}

void applyProblemFlags(const ProblemFlags& p, ExperimentSpec& spec) {
  spec.problem = harness::parseProblemKind(p.problem);
  spec.input = p.input;
  spec.csvHeader = p.csvHeader;
  spec.k = p.k;
  spec.epsilon = p.epsilon;
  if (!p.perturb.empty()) spec.perturb = objectives::parsePerturbationMode(p.perturb);
  spec.perturbSeed = p.perturbSeed;
  spec.guardOverride = p.guardOverride;
  spec.outputPath = p.out;
  if (spec.problem == harness::ProblemKind::Perturbed && !spec.epsilon) {
    throw GuardError("perturbed problems require --epsilon");
  }
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "' for writing");
  file << text;
}

int doRun(const ProblemFlags& p, const std::string& algo, std::uint64_t budget,
          const std::string& seeds, const std::string& tracePath, std::uint64_t traceEvery,
          bool withOpt, unsigned threads, std::ostream& out) {
  ExperimentSpec spec;
  applyProblemFlags(p, spec);
  spec.algorithm = harness::parseAlgorithm(algo);
  spec.budget = budget;
  spec.seeds = harness::parseSeeds(seeds);
  spec.tracePath = tracePath;
  spec.traceEvery = traceEvery;
  spec.computeOpt = withOpt;
  harness::validate(spec);

  const auto f = harness::loadProblem(spec);
  const harness::ExperimentOutcome outcome = harness::runExperiment(spec, *f, threads);

  if (!tracePath.empty()) {
    const bool multiple = outcome.traces.size() > 1;
    for (std::size_t i = 0; i < outcome.traces.size(); ++i) {
      const auto path = harness::tracePathForSeed(tracePath, spec.seeds[i], multiple);
      std::ofstream file(path);
      if (!file) throw ParseError("cannot open '" + path.string() + "' for writing");
      harness::writeTraceCsv(file, outcome.traces[i]);
    }
  }
  emit(p.out, harness::toJson(outcome.record).dump(2) + "\n", out);
  out << harness::summaryLine(outcome.record) << '\n';
  return kExitOk;
}

int doVerify(const std::string& suite, std::ostream& out) {
  const auto ids = harness::suiteCriteria(suite);
  int passed = 0;
  for (int id : ids) {
    const harness::CriterionResult c = harness::runCriterion(id);
    out << harness::formatCriterion(c) << std::endl;
    if (c.passed) ++passed;
  }
  out << "suite " << suite << ": " << passed << '/' << ids.size() << " criteria passed\n";
  return passed == static_cast<int>(ids.size()) ? kExitOk : kExitFailed;
}

int doDiagnose(const ProblemFlags& p, std::ostream& out) {
  ExperimentSpec spec;
  applyProblemFlags(p, spec);
  const auto f = harness::loadProblem(spec);
  if (spec.k && (*spec.k < 1 || *spec.k > f->n())) {
    throw GuardError("k must satisfy 1 <= k <= n = " + std::to_string(f->n()));
  }
  diagnostics::DiagnosticsOptions options;
  options.allowOverride = spec.guardOverride;
  const auto report = diagnostics::runDiagnostics(*f, spec.k, options);
  emit(p.out, harness::diagnosticsJson(*f, report).dump(2) + "\n", out);
  return kExitOk;
}

int doOpt(const ProblemFlags& p, std::ostream& out) {
  ExperimentSpec spec;
  applyProblemFlags(p, spec);
  const auto f = harness::loadProblem(spec);
  const auto opt = diagnostics::bruteForceOpt(*f, spec.k, spec.guardOverride);
  const nlohmann::json j = {{"function", f->name()},
                            {"n", f->n()},
                            {"k", spec.k ? nlohmann::json(*spec.k) : nlohmann::json(nullptr)},
                            {"opt", opt.value},
                            {"optSubset", opt.argmax.toBitString()}};
  emit(p.out, j.dump(2) + "\n", out);
  return kExitOk;
}

}  // namespace

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"GSEMO subset maximization: runs, verification suites, diagnostics"};
  app.require_subcommand(1);

  ProblemFlags runFlags;
  std::string algo = "gsemo";
  std::uint64_t budget = 1000;
  std::string seeds = "1";
  std::string tracePath;
  std::uint64_t traceEvery = 1000;
  bool withOpt = false;
  unsigned threads = 0;
  CLI::App* run = app.add_subcommand("run", "Run an algorithm over one or more seeds");
  addProblemFlags(run, runFlags);
  run->add_option("--algo", algo, "gsemo | oneplusone | greedy | doublegreedy | localsearch");
  run->add_option("--budget", budget, "Iteration budget");
  run->add_option("--seeds", seeds, "Seed list, e.g. 1..20 or 3,5,7");
  run->add_option("--trace", tracePath, "CSV trace path (per-seed suffix for several seeds)");
  run->add_option("--trace-every", traceEvery, "Iterations between trace rows");
  run->add_flag("--with-opt", withOpt, "Brute-force OPT and per-seed ratios");
  run->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  std::string suite;
  CLI::App* verify = app.add_subcommand("verify", "Run an acceptance suite");
  verify->add_option("--suite", suite, "core | theorem1..theorem4 | lemmas | baselines | "
                                       "collapse | all")
      ->required();

  ProblemFlags diagFlags;
  CLI::App* diagnose = app.add_subcommand("diagnose", "OPT, property flags, gamma, eps, bounds");
  addProblemFlags(diagnose, diagFlags);

  ProblemFlags optFlags;
  CLI::App* opt = app.add_subcommand("opt", "Brute-force optimum");
  addProblemFlags(opt, optFlags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (*run) {
      return doRun(runFlags, algo, budget, seeds, tracePath, traceEvery, withOpt, threads, out);
    }
    if (*verify) return doVerify(suite, out);
    if (*diagnose) return doDiagnose(diagFlags, out);
    return doOpt(optFlags, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    err << "guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::domain_error& e) {
    err << "guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace gsemo::cli
