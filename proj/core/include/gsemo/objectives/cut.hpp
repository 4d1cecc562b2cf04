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

#include <cstddef>
#include <vector>

#include "gsemo/objectives/set_function.hpp"

namespace gsemo::objectives {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected graph with non-negative edge weights; no self loops or
/// parallel edges.
class WeightedGraph {
 public:
  /// Validates the edge list; throws std::invalid_argument naming the first
  /// offending edge.
  WeightedGraph(std::size_t n, std::vector<Edge> edges);

  std::size_t n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  double totalWeight() const noexcept;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

/// Total weight of edges with exactly one endpoint in X.
double cutValue(const WeightedGraph& g, const SubsetSolution& x);

/// Maximum cut objective: non-negative, submodular, symmetric, not monotone.
class CutFunction final : public SetFunction {
 public:
  explicit CutFunction(WeightedGraph graph);

  double evaluate(const SubsetSolution& x) const override;
  bool declaredMonotone() const noexcept override { return false; }
  bool declaredNonNegative() const noexcept override { return true; }
  std::string name() const override { return "maxcut"; }

  const WeightedGraph& graph() const noexcept { return graph_; }

 private:
  WeightedGraph graph_;
};

}  // namespace gsemo::objectives
