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

#include "gsemo/objectives/cut.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace gsemo::objectives {

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    const std::string where = "edge " + std::to_string(i) + ": ";
    if (e.u >= n || e.v >= n) throw std::invalid_argument(where + "vertex out of range");
    if (e.u == e.v) throw std::invalid_argument(where + "self loop");
    if (!(e.weight >= 0.0)) throw std::invalid_argument(where + "negative weight");
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw std::invalid_argument(where + "duplicate edge");
    }
  }
}

double WeightedGraph::totalWeight() const noexcept {
  double w = 0.0;
  for (const Edge& e : edges_) w += e.weight;
  return w;
}

double cutValue(const WeightedGraph& g, const SubsetSolution& x) {
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    if (x.contains(e.u) != x.contains(e.v)) total += e.weight;
  }
  return total;
}

CutFunction::CutFunction(WeightedGraph graph)
    : SetFunction(GroundSet(graph.n())), graph_(std::move(graph)) {}

double CutFunction::evaluate(const SubsetSolution& x) const {
  checkDomain(*this, x);
  return cutValue(graph_, x);
}

}  // namespace gsemo::objectives
