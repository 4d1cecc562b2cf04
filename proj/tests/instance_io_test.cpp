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

#include <sstream>

#include "gsemo/core/errors.hpp"
#include "gsemo/objectives/generators.hpp"
#include "gsemo/objectives/instance_io.hpp"

namespace gsemo::objectives {
namespace {

template <class Fn>
std::string parseErrorOf(Fn&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(GraphFile, ParsesCommentsAndBlankLines) {
  std::istringstream in("# triangle\n3 3\n\n0 1 1\n1 2 1.5\n0 2 2\n");
  const WeightedGraph g = readGraph(in);
  EXPECT_EQ(g.n(), 3u);
  ASSERT_EQ(g.edges().size(), 3u);
  EXPECT_EQ(g.edges()[1].weight, 1.5);
}

TEST(GraphFile, MalformedLineNamesTheLine) {
  std::istringstream in("3 2\n0 1 1\n1 two 1\n");
  const std::string msg = parseErrorOf([&] { readGraph(in); });
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
}

TEST(GraphFile, DuplicateAndSelfEdgesNameTheLine) {
  std::istringstream dup("3 2\n0 1 1\n1 0 1\n");
  EXPECT_NE(parseErrorOf([&] { readGraph(dup); }).find("line 3"), std::string::npos);
  std::istringstream self("3 1\n2 2 1\n");
  EXPECT_NE(parseErrorOf([&] { readGraph(self); }).find("line 2"), std::string::npos);
}

TEST(GraphFile, EdgeCountMismatch) {
  std::istringstream in("3 3\n0 1 1\n");
  EXPECT_THROW(readGraph(in), ParseError);
}

TEST(GraphFile, RoundTrip) {
  const WeightedGraph g = generate::randomGraph(9, 0.5, 7, 4);
  std::stringstream s;
  writeGraph(s, g);
  const WeightedGraph back = readGraph(s);
  EXPECT_EQ(back.n(), g.n());
  EXPECT_EQ(back.edges(), g.edges());
}

TEST(CoverageFile, ParsesAndRoundTrips) {
  std::istringstream in("2 3\n2 0 1\n1 2\n1 2.5 4\n");
  const CoverageInstance inst = readCoverage(in);
  EXPECT_EQ(inst.universe, 3u);
  EXPECT_EQ(inst.coveredBy[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(inst.itemWeights[1], 2.5);
  std::stringstream s;
  writeCoverage(s, inst);
  const CoverageInstance back = readCoverage(s);
  EXPECT_EQ(back.coveredBy, inst.coveredBy);
  EXPECT_EQ(back.itemWeights, inst.itemWeights);
}

TEST(CoverageFile, ItemOutOfRange) {
  std::istringstream in("1 2\n1 5\n1 1\n");
  EXPECT_NE(parseErrorOf([&] { readCoverage(in); }).find("line 2"), std::string::npos);
}

TEST(FacilityFile, ParsesAndRoundTrips) {
  std::istringstream in("2 3\n1 2 3\n4 5 6\n0 1 0.5\n");
  const FacilityLocationInstance inst = readFacility(in);
  EXPECT_EQ(inst.customers(), 2u);
  EXPECT_EQ(inst.facilities(), 3u);
  std::stringstream s;
  writeFacility(s, inst);
  const FacilityLocationInstance back = readFacility(s);
  EXPECT_EQ(back.benefit, inst.benefit);
  EXPECT_EQ(back.facilityCosts, inst.facilityCosts);
}

TEST(RegressionCsv, HeaderAndCentering) {
  std::istringstream in("a,b,y\n1,0,1\n2,1,2\n3,5,6\n");
  const RegressionInstance inst = readRegressionCsv(in, true);
  EXPECT_EQ(inst.rows, 3u);
  EXPECT_EQ(inst.columns, 2u);
  double colSum = 0.0;
  double ySum = 0.0;
  for (std::size_t r = 0; r < 3; ++r) {
    colSum += inst.at(r, 0);
    ySum += inst.target[r];
  }
  EXPECT_NEAR(colSum, 0.0, 1e-12);
  EXPECT_NEAR(ySum, 0.0, 1e-12);
}

TEST(RegressionCsv, HeaderWithoutFlagIsAParseError) {
  std::istringstream in("a,b,y\n1,0,1\n");
  EXPECT_NE(parseErrorOf([&] { readRegressionCsv(in, false); }).find("line 1"),
            std::string::npos);
}

TEST(RegressionCsv, RaggedRow) {
  std::istringstream in("1,2,3\n4,5\n");
  EXPECT_NE(parseErrorOf([&] { readRegressionCsv(in, false); }).find("line 2"),
            std::string::npos);
}

TEST(RegressionCsv, RoundTrip) {
  const RegressionInstance inst = generate::randomRegression(8, 3, 2);
  std::stringstream s;
  writeRegressionCsv(s, inst);
  const RegressionInstance back = readRegressionCsv(s, false);
  ASSERT_EQ(back.design.size(), inst.design.size());
  for (std::size_t i = 0; i < inst.design.size(); ++i) {
    EXPECT_NEAR(back.design[i], inst.design[i], 1e-12);
  }
}

}  // namespace
}  // namespace gsemo::objectives
