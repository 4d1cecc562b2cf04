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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gsemo/engines/run.hpp"
#include "gsemo/harness/experiment.hpp"

namespace gsemo::harness {

inline constexpr std::string_view kResultSchema = "gsemo-result-v1";

nlohmann::json toJson(const ExperimentSpec& spec);
nlohmann::json toJson(const ResultRecord& record);
/// Throws ParseError on missing or mistyped fields.
ExperimentSpec specFromJson(const nlohmann::json& j);
ResultRecord resultFromJson(const nlohmann::json& j);

void writeResult(std::ostream& out, const ResultRecord& record);
ResultRecord readResult(std::istream& in);
void saveResult(const std::filesystem::path& path, const ResultRecord& record);
ResultRecord loadResult(const std::filesystem::path& path);

/// Columns iteration,bestFeasibleValue,archiveOccupancy; an empty value
/// column while no feasible solution exists.
void writeTraceCsv(std::ostream& out, const std::vector<engines::TraceRecord>& trace);
/// base itself for a single seed, otherwise base with ".seed<N>" inserted
/// before the extension.
std::filesystem::path tracePathForSeed(const std::filesystem::path& base, std::uint64_t seed,
                                       bool multipleSeeds);

/// One-line human summary: algorithm, seeds, min/median/max, opt if known.
std::string summaryLine(const ResultRecord& record);

}  // namespace gsemo::harness
