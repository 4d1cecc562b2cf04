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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace gsemo::cli {
namespace {

namespace fs = std::filesystem;

fs::path scratch() {
  const char* env = std::getenv("GSEMO_TEST_TMP");
  fs::path dir = env ? fs::path(env) : fs::temp_directory_path();
  dir /= "cli_scratch";
  fs::create_directories(dir);
  return dir;
}

fs::path writeFile(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "gsemo");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = runCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const char* kTriangle = "3 3\n0 1 1\n1 2 1\n0 2 1\n";
const char* kCoverage = "4 5\n2 0 1\n1 2\n2 3 4\n1 0\n5 3 1 2 2\n";

TEST(Cli, RunTriangleTwentySeeds) {
  const fs::path graph = writeFile("tri.graph", kTriangle);
  const fs::path out = scratch() / "r.json";
  const Outcome o = run({"run", "--problem", "maxcut", "--input", graph.string(), "--algo", "gsemo",
                         "--budget", "1000", "--seeds", "1..20", "--out", out.string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  ASSERT_EQ(j["runs"].size(), 20u);
  for (const auto& r : j["runs"]) EXPECT_EQ(r["bestValue"].get<double>(), 2.0);
  EXPECT_NE(o.out.find("median 2"), std::string::npos);
}

TEST(Cli, GreedyIgnoresSeeds) {
  const fs::path cov = writeFile("cov.txt", kCoverage);
  const Outcome o = run({"run", "--algo", "greedy", "--problem", "coverage", "--input",
                         cov.string(), "--k", "2", "--seeds", "1..5"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto j = nlohmann::json::parse(o.out.substr(0, o.out.rfind('}') + 1));
  EXPECT_EQ(j["runs"].size(), 1u);
  EXPECT_NE(j["note"].get<std::string>().find("seeds ignored"), std::string::npos);
}

TEST(Cli, MalformedGraphExitsWithParseCode) {
  const fs::path bad = writeFile("bad.graph", "3 2\n0 1 1\n1 2 x\n");
  const Outcome o = run({"run", "--problem", "maxcut", "--input", bad.string()});
  EXPECT_EQ(o.code, kExitParse);
  EXPECT_NE(o.err.find("line 3"), std::string::npos) << o.err;
}

TEST(Cli, GuardViolationsExitThree) {
  const fs::path graph = writeFile("tri2.graph", kTriangle);
  EXPECT_EQ(run({"run", "--problem", "maxcut", "--input", graph.string(), "--k", "5"}).code,
            kExitGuard);
  EXPECT_EQ(run({"run", "--problem", "maxcut", "--input", graph.string(), "--budget", "0"}).code,
            kExitGuard);
}

TEST(Cli, BadFlagsExitTwo) {
  EXPECT_EQ(run({"run", "--problem", "maxcut"}).code, kExitParse);
  EXPECT_EQ(run({"run", "--problem", "tsp", "--input", "x"}).code, kExitParse);
  EXPECT_EQ(run({"frobnicate"}).code, kExitParse);
  const fs::path graph = writeFile("tri3.graph", kTriangle);
  EXPECT_EQ(run({"run", "--problem", "maxcut", "--input", graph.string(), "--seeds", "3,3"}).code,
            kExitParse);
}

TEST(Cli, HelpExitsZero) {
  for (const char* cmd : {"run", "verify", "diagnose", "opt"}) {
    const Outcome o = run({cmd, "--help"});
    EXPECT_EQ(o.code, 0) << cmd;
    EXPECT_FALSE(o.out.empty());
  }
}

TEST(Cli, VerifyCore) {
  const Outcome o = run({"verify", "--suite", "core"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("[PASS] 10"), std::string::npos) << o.out;
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, kExitParse);
}

TEST(Cli, DiagnoseAndOpt) {
  const fs::path cov = writeFile("cov2.txt", kCoverage);
  const Outcome d = run({"diagnose", "--problem", "coverage", "--input", cov.string(), "--k", "3"});
  ASSERT_EQ(d.code, kExitOk) << d.err;
  const auto j = nlohmann::json::parse(d.out);
  EXPECT_NEAR(j["gammaMin"].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(j["bounds"]["ratio"]["factor"].get<double>(), 0.6321, 1e-4);

  const Outcome o = run({"opt", "--problem", "coverage", "--input", cov.string(), "--k", "1"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(nlohmann::json::parse(o.out)["opt"].get<double>(), 8.0);
}

TEST(Cli, DiagnoseCutSuppressesBounds) {
  const fs::path graph = writeFile("tri4.graph", kTriangle);
  const Outcome d = run({"diagnose", "--problem", "maxcut", "--input", graph.string(), "--k", "2"});
  ASSERT_EQ(d.code, kExitOk);
  const auto j = nlohmann::json::parse(d.out);
  EXPECT_EQ(j["properties"]["monotone"]["verdict"], "fail");
  EXPECT_TRUE(j["bounds"]["suppressed"].is_string());
}

TEST(Cli, TraceFilesPerSeed) {
  const fs::path graph = writeFile("tri5.graph", kTriangle);
  const fs::path trace = scratch() / "trace.csv";
  const Outcome o = run({"run", "--problem", "maxcut", "--input", graph.string(), "--seeds",
                         "4,5", "--budget", "20", "--trace", trace.string(), "--trace-every",
                         "5", "--out", (scratch() / "t.json").string()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  for (const char* name : {"trace.seed4.csv", "trace.seed5.csv"}) {
    std::ifstream in(scratch() / name);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "iteration,bestFeasibleValue,archiveOccupancy");
  }
}

TEST(Cli, PerturbedNeedsEpsilon) {
  const fs::path cov = writeFile("cov3.txt", kCoverage);
  EXPECT_EQ(run({"run", "--problem", "perturbed", "--input", cov.string()}).code, kExitGuard);
  EXPECT_EQ(run({"run", "--problem", "perturbed", "--input", cov.string(), "--epsilon", "0.05",
                 "--perturb", "multiplicative", "--k", "2"})
                .code,
            kExitOk);
}

}  // namespace
}  // namespace gsemo::cli
