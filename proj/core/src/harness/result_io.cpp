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

#include "gsemo/harness/result_io.hpp"

#include <fstream>
#include <sstream>

#include "gsemo/core/errors.hpp"

namespace gsemo::harness {

using nlohmann::json;

namespace {

template <class T>
json optionalJson(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("result file: missing field '") + key + "'");
  }
  return j.at(key);
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("result file: field '") + key + "' has the wrong type");
  }
}

template <class T>
std::optional<T> getOptional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return get<T>(j, key);
}

}  // namespace

json toJson(const ExperimentSpec& spec) {
  json perturb = spec.perturb ? json(std::string(objectives::toString(*spec.perturb)))
                              : json(nullptr);
  return {
      {"problem", std::string(toString(spec.problem))},
      {"input", spec.input},
      {"csvHeader", spec.csvHeader},
      {"algorithm", std::string(toString(spec.algorithm))},
      {"k", spec.k ? json(*spec.k) : json(nullptr)},
      {"budget", spec.budget},
      {"seeds", spec.seeds},
      {"epsilon", optionalJson(spec.epsilon)},
      {"perturb", perturb},
      {"perturbSeed", spec.perturbSeed},
      {"traceEvery", spec.traceEvery},
      {"computeOpt", spec.computeOpt},
      {"guardOverride", spec.guardOverride},
      {"outputPath", spec.outputPath},
      {"tracePath", spec.tracePath},
  };
}

json toJson(const ResultRecord& record) {
  json runs = json::array();
  for (const auto& r : record.runs) {
    runs.push_back({{"seed", r.seed},
                    {"bestValue", r.bestValue},
                    {"bestSubset", r.bestSubset},
                    {"oracleCalls", r.oracleCalls},
                    {"iterations", r.iterations},
                    {"wallMillis", r.wallMillis},
                    {"ratioToOpt", optionalJson(r.ratioToOpt)}});
  }
  return {
      {"schema", std::string(kResultSchema)},
      {"spec", toJson(record.spec)},
      {"generator", record.generator},
      {"note", record.note},
      {"runs", runs},
      {"aggregate",
       {{"min", record.aggregate.min},
        {"median", record.aggregate.median},
        {"max", record.aggregate.max}}},
      {"opt", optionalJson(record.opt)},
  };
}

ExperimentSpec specFromJson(const json& j) {
  ExperimentSpec spec;
  spec.problem = parseProblemKind(get<std::string>(j, "problem"));
  spec.input = get<std::string>(j, "input");
  spec.csvHeader = get<bool>(j, "csvHeader");
  spec.algorithm = parseAlgorithm(get<std::string>(j, "algorithm"));
  spec.k = getOptional<std::size_t>(j, "k");
  spec.budget = get<std::uint64_t>(j, "budget");
  spec.seeds = get<std::vector<std::uint64_t>>(j, "seeds");
  spec.epsilon = getOptional<double>(j, "epsilon");
  if (auto p = getOptional<std::string>(j, "perturb")) {
    spec.perturb = objectives::parsePerturbationMode(*p);
  }
  spec.perturbSeed = get<std::uint64_t>(j, "perturbSeed");
  spec.traceEvery = get<std::uint64_t>(j, "traceEvery");
  spec.computeOpt = get<bool>(j, "computeOpt");
  spec.guardOverride = get<bool>(j, "guardOverride");
  spec.outputPath = get<std::string>(j, "outputPath");
  spec.tracePath = get<std::string>(j, "tracePath");
  return spec;
}

ResultRecord resultFromJson(const json& j) {
  if (get<std::string>(j, "schema") != kResultSchema) {
    throw ParseError("result file: unsupported schema");
  }
  ResultRecord record;
  record.spec = specFromJson(field(j, "spec"));
  record.generator = get<std::string>(j, "generator");
  record.note = get<std::string>(j, "note");
  const json& runs = field(j, "runs");
  if (!runs.is_array()) throw ParseError("result file: 'runs' must be an array");
  for (const json& r : runs) {
    SeedRecord s;
    s.seed = get<std::uint64_t>(r, "seed");
    s.bestValue = get<double>(r, "bestValue");
    s.bestSubset = get<std::string>(r, "bestSubset");
    s.oracleCalls = get<std::uint64_t>(r, "oracleCalls");
    s.iterations = get<std::uint64_t>(r, "iterations");
    s.wallMillis = get<double>(r, "wallMillis");
    s.ratioToOpt = getOptional<double>(r, "ratioToOpt");
    record.runs.push_back(std::move(s));
  }
  const json& agg = field(j, "aggregate");
  record.aggregate = {get<double>(agg, "min"), get<double>(agg, "median"),
                      get<double>(agg, "max")};
  record.opt = getOptional<double>(j, "opt");
  return record;
}

void writeResult(std::ostream& out, const ResultRecord& record) {
  out << toJson(record).dump(2) << '\n';
}

ResultRecord readResult(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("result file: ") + e.what());
  }
  return resultFromJson(j);
}

void saveResult(const std::filesystem::path& path, const ResultRecord& record) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path.string() + "' for writing");
  writeResult(out, record);
}

ResultRecord loadResult(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return readResult(in);
}

void writeTraceCsv(std::ostream& out, const std::vector<engines::TraceRecord>& trace) {
  const auto precision = out.precision(17);
  out << "iteration,bestFeasibleValue,archiveOccupancy\n";
  for (const auto& t : trace) {
    out << t.iteration << ',';
    if (t.bestFeasibleValue) out << *t.bestFeasibleValue;
    out << ',' << t.archiveOccupancy << '\n';
  }
  out.precision(precision);
}

std::filesystem::path tracePathForSeed(const std::filesystem::path& base, std::uint64_t seed,
                                       bool multipleSeeds) {
  if (!multipleSeeds) return base;
  std::filesystem::path p = base;
  p.replace_filename(base.stem().string() + ".seed" + std::to_string(seed) +
                     base.extension().string());
  return p;
}

std::string summaryLine(const ResultRecord& record) {
  std::ostringstream s;
  s << toString(record.spec.algorithm) << " on " << toString(record.spec.problem) << ": "
    << record.runs.size() << (record.runs.size() == 1 ? " run" : " runs") << ", best min "
    << record.aggregate.min << " median " << record.aggregate.median << " max "
    << record.aggregate.max;
  if (record.opt) s << ", OPT " << *record.opt;
  if (!record.note.empty()) s << " (" << record.note << ')';
  return s.str();
}

}  // namespace gsemo::harness
