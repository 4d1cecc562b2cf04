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

/// Weighted coverage: element i covers the universe items coveredBy[i].
struct CoverageInstance {
  std::size_t universe = 0;
  std::vector<std::vector<std::size_t>> coveredBy;
  std::vector<double> itemWeights;

  /// Throws std::invalid_argument on out-of-range items or negative weights.
  void validate() const;
};

/// Total weight of items covered by at least one element of X.
double coverageValue(const CoverageInstance& inst, const SubsetSolution& x);

/// Monotone, submodular, normalized.
class CoverageFunction final : public SetFunction {
 public:
  explicit CoverageFunction(CoverageInstance inst);

  double evaluate(const SubsetSolution& x) const override;
  bool declaredMonotone() const noexcept override { return true; }
  bool declaredNonNegative() const noexcept override { return true; }
  std::string name() const override { return "coverage"; }

  const CoverageInstance& instance() const noexcept { return inst_; }

 private:
  CoverageInstance inst_;
  // Per element, packed bitmask over the universe.
  std::vector<std::vector<std::uint64_t>> masks_;
};

}  // namespace gsemo::objectives
