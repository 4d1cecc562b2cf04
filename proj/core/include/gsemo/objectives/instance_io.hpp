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

#include <filesystem>
#include <iosfwd>

#include "gsemo/objectives/coverage.hpp"
#include "gsemo/objectives/cut.hpp"
#include "gsemo/objectives/facility_location.hpp"
#include "gsemo/objectives/regression.hpp"

// Plain-text instance formats. Blank lines and lines starting with '#' are
// ignored; every ParseError carries the 1-based physical line number.
//
//   graph:     "n m", then m lines "u v w" (0-indexed vertices, w >= 0)
//   coverage:  "n m", then n lines "c i1 ... ic", then one line of m weights
//   facility:  "customers facilities", one benefit row per customer, then
//              one line of facility costs
//   regression: CSV, last column is the target; optional header row

namespace gsemo::objectives {

WeightedGraph readGraph(std::istream& in);
CoverageInstance readCoverage(std::istream& in);
FacilityLocationInstance readFacility(std::istream& in);
/// Columns and target are mean-centered after loading.
RegressionInstance readRegressionCsv(std::istream& in, bool hasHeader);

void writeGraph(std::ostream& out, const WeightedGraph& g);
void writeCoverage(std::ostream& out, const CoverageInstance& inst);
void writeFacility(std::ostream& out, const FacilityLocationInstance& inst);
void writeRegressionCsv(std::ostream& out, const RegressionInstance& inst);

/// Opens path and dispatches to the reader; missing files raise ParseError.
WeightedGraph loadGraph(const std::filesystem::path& path);
CoverageInstance loadCoverage(const std::filesystem::path& path);
FacilityLocationInstance loadFacility(const std::filesystem::path& path);
RegressionInstance loadRegressionCsv(const std::filesystem::path& path, bool hasHeader);

}  // namespace gsemo::objectives
