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

#include "gsemo/objectives/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gsemo/core/errors.hpp"

namespace gsemo::objectives {
namespace {

// Yields the next content line with its physical line number.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return true;
    }
    return false;
  }
  std::string require(const char* what) {
    std::string line;
    if (!next(line)) throw ParseError(std::string("unexpected end of input, expected ") + what, number_ + 1);
    return line;
  }
  std::size_t number() const noexcept { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::vector<std::string> tokens(const std::string& line, char sep = 0) {
  std::vector<std::string> out;
  if (sep == 0) {
    std::istringstream ss(line);
    for (std::string t; ss >> t;) out.push_back(t);
  } else {
    std::string cur;
    std::istringstream ss(line);
    while (std::getline(ss, cur, sep)) {
      const auto b = cur.find_first_not_of(" \t");
      const auto e = cur.find_last_not_of(" \t");
      out.push_back(b == std::string::npos ? std::string() : cur.substr(b, e - b + 1));
    }
  }
  return out;
}

std::size_t toIndex(const std::string& t, std::size_t line) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size()) {
    throw ParseError("expected a non-negative integer, got '" + t + "'", line);
  }
  return v;
}

double toReal(const std::string& t, std::size_t line) {
  double v = 0.0;
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || p != t.data() + t.size()) {
    throw ParseError("expected a real number, got '" + t + "'", line);
  }
  return v;
}

void expectCount(const std::vector<std::string>& tok, std::size_t count, const char* what,
                 std::size_t line) {
  if (tok.size() != count) {
    throw ParseError(std::string("expected ") + what + " (" + std::to_string(count) +
                         " fields), got " + std::to_string(tok.size()) + " fields",
                     line);
  }
}

template <class T, class Reader>
T loadWith(const std::filesystem::path& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return reader(in);
}

void writeReal(std::ostream& out, double v) {
  out << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
}

}  // namespace

WeightedGraph readGraph(std::istream& in) {
  LineReader r(in);
  auto head = tokens(r.require("header 'n m'"));
  expectCount(head, 2, "header 'n m'", r.number());
  const std::size_t n = toIndex(head[0], r.number());
  const std::size_t m = toIndex(head[1], r.number());
  if (n == 0) throw ParseError("graph must have at least one vertex", r.number());
  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < m; ++i) {
    auto tok = tokens(r.require("edge line 'u v w'"));
    const std::size_t line = r.number();
    expectCount(tok, 3, "edge 'u v w'", line);
    Edge e{toIndex(tok[0], line), toIndex(tok[1], line), toReal(tok[2], line)};
    if (e.u >= n || e.v >= n) throw ParseError("vertex index out of range", line);
    if (e.u == e.v) throw ParseError("self loop on vertex " + std::to_string(e.u), line);
    if (!(e.weight >= 0.0)) throw ParseError("edge weight must be >= 0", line);
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw ParseError("duplicate edge " + tok[0] + "-" + tok[1], line);
    }
    edges.push_back(e);
  }
  if (std::string extra; r.next(extra)) throw ParseError("trailing content after edge list", r.number());
  return WeightedGraph(n, std::move(edges));
}

CoverageInstance readCoverage(std::istream& in) {
  LineReader r(in);
  auto head = tokens(r.require("header 'n m'"));
  expectCount(head, 2, "header 'n m'", r.number());
  const std::size_t n = toIndex(head[0], r.number());
  const std::size_t m = toIndex(head[1], r.number());
  if (n == 0) throw ParseError("coverage instance needs at least one element", r.number());
  CoverageInstance inst;
  inst.universe = m;
  for (std::size_t i = 0; i < n; ++i) {
    auto tok = tokens(r.require("element line 'c i1 ... ic'"));
    const std::size_t line = r.number();
    const std::size_t c = toIndex(tok.at(0), line);
    expectCount(tok, c + 1, "element line 'c i1 ... ic'", line);
    std::vector<std::size_t> items;
    for (std::size_t j = 1; j <= c; ++j) {
      const std::size_t item = toIndex(tok[j], line);
      if (item >= m) throw ParseError("item " + tok[j] + " outside universe of size " + head[1], line);
      items.push_back(item);
    }
    inst.coveredBy.push_back(std::move(items));
  }
  auto wt = tokens(r.require("weight line"));
  expectCount(wt, m, "weight line", r.number());
  for (const auto& t : wt) {
    const double w = toReal(t, r.number());
    if (!(w >= 0.0)) throw ParseError("item weights must be >= 0", r.number());
    inst.itemWeights.push_back(w);
  }
  if (std::string extra; r.next(extra)) throw ParseError("trailing content after weights", r.number());
  return inst;
}

FacilityLocationInstance readFacility(std::istream& in) {
  LineReader r(in);
  auto head = tokens(r.require("header 'customers facilities'"));
  expectCount(head, 2, "header 'customers facilities'", r.number());
  const std::size_t customers = toIndex(head[0], r.number());
  const std::size_t facilities = toIndex(head[1], r.number());
  if (facilities == 0) throw ParseError("need at least one facility", r.number());
  FacilityLocationInstance inst;
  for (std::size_t c = 0; c < customers; ++c) {
    auto tok = tokens(r.require("benefit row"));
    expectCount(tok, facilities, "benefit row", r.number());
    std::vector<double> row;
    for (const auto& t : tok) {
      const double b = toReal(t, r.number());
      if (!(b >= 0.0)) throw ParseError("benefits must be >= 0", r.number());
      row.push_back(b);
    }
    inst.benefit.push_back(std::move(row));
  }
  auto costs = tokens(r.require("cost line"));
  expectCount(costs, facilities, "cost line", r.number());
  for (const auto& t : costs) {
    const double c = toReal(t, r.number());
    if (!(c >= 0.0)) throw ParseError("facility costs must be >= 0", r.number());
    inst.facilityCosts.push_back(c);
  }
  if (std::string extra; r.next(extra)) throw ParseError("trailing content after costs", r.number());
  return inst;
}

RegressionInstance readRegressionCsv(std::istream& in, bool hasHeader) {
  LineReader r(in);
  RegressionInstance inst;
  std::string line;
  if (hasHeader && !r.next(line)) throw ParseError("empty regression file", 1);
  std::size_t width = 0;
  while (r.next(line)) {
    auto tok = tokens(line, ',');
    if (width == 0) {
      if (tok.size() < 2) throw ParseError("need at least one feature column and a target", r.number());
      width = tok.size();
    } else if (tok.size() != width) {
      throw ParseError("expected " + std::to_string(width) + " columns, got " + std::to_string(tok.size()),
                       r.number());
    }
    for (std::size_t c = 0; c + 1 < width; ++c) inst.design.push_back(toReal(tok[c], r.number()));
    inst.target.push_back(toReal(tok.back(), r.number()));
  }
  if (width == 0) throw ParseError("regression file has no data rows", r.number() + 1);
  inst.columns = width - 1;
  inst.rows = inst.target.size();
  inst.center();
  return inst;
}

void writeGraph(std::ostream& out, const WeightedGraph& g) {
  out << g.n() << ' ' << g.edges().size() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ';
    writeReal(out, e.weight);
    out << '\n';
  }
}

void writeCoverage(std::ostream& out, const CoverageInstance& inst) {
  out << inst.coveredBy.size() << ' ' << inst.universe << '\n';
  for (const auto& items : inst.coveredBy) {
    out << items.size();
    for (std::size_t i : items) out << ' ' << i;
    out << '\n';
  }
  for (std::size_t j = 0; j < inst.itemWeights.size(); ++j) {
    if (j) out << ' ';
    writeReal(out, inst.itemWeights[j]);
  }
  out << '\n';
}

void writeFacility(std::ostream& out, const FacilityLocationInstance& inst) {
  out << inst.customers() << ' ' << inst.facilities() << '\n';
  auto row = [&out](const std::vector<double>& values) {
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (j) out << ' ';
      writeReal(out, values[j]);
    }
    out << '\n';
  };
  for (const auto& b : inst.benefit) row(b);
  row(inst.facilityCosts);
}

void writeRegressionCsv(std::ostream& out, const RegressionInstance& inst) {
  for (std::size_t r = 0; r < inst.rows; ++r) {
    for (std::size_t c = 0; c < inst.columns; ++c) {
      writeReal(out, inst.at(r, c));
      out << ',';
    }
    writeReal(out, inst.target[r]);
    out << '\n';
  }
}

WeightedGraph loadGraph(const std::filesystem::path& path) {
  return loadWith<WeightedGraph>(path, [](std::istream& in) { return readGraph(in); });
}
CoverageInstance loadCoverage(const std::filesystem::path& path) {
  return loadWith<CoverageInstance>(path, [](std::istream& in) { return readCoverage(in); });
}
FacilityLocationInstance loadFacility(const std::filesystem::path& path) {
  return loadWith<FacilityLocationInstance>(path, [](std::istream& in) { return readFacility(in); });
}
RegressionInstance loadRegressionCsv(const std::filesystem::path& path, bool hasHeader) {
  return loadWith<RegressionInstance>(
      path, [hasHeader](std::istream& in) { return readRegressionCsv(in, hasHeader); });
}

}  // namespace gsemo::objectives
