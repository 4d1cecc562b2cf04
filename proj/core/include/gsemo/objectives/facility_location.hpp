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

/// benefit[c][j]: value customer c receives from facility j.
struct FacilityLocationInstance {
  std::vector<std::vector<double>> benefit;
  std::vector<double> facilityCosts;

  std::size_t customers() const noexcept { return benefit.size(); }
  std::size_t facilities() const noexcept { return facilityCosts.size(); }
  void validate() const;
};

/// sum_c max_{j in X} benefit[c][j] - sum_{j in X} cost[j]; the max over the
/// empty set is 0. No clamping.
double facilityLocationValue(const FacilityLocationInstance& inst, const SubsetSolution& x);

/// Submodular; monotone exactly when every cost is zero.
///
/// Non-negativity is established at construction: trivially for zero costs,
/// analytically when the total cost does not exceed the smallest column sum,
/// and otherwise by enumerating all subsets when there are at most
/// kExhaustiveLimit facilities.
class FacilityLocationFunction final : public SetFunction {
 public:
  static constexpr std::size_t kExhaustiveLimit = 20;

  explicit FacilityLocationFunction(FacilityLocationInstance inst);

  double evaluate(const SubsetSolution& x) const override;
  bool declaredMonotone() const noexcept override { return monotone_; }
  bool declaredNonNegative() const noexcept override { return nonNegative_; }
  std::string name() const override { return "facility"; }

  const FacilityLocationInstance& instance() const noexcept { return inst_; }

 private:
  FacilityLocationInstance inst_;
  bool monotone_ = false;
  bool nonNegative_ = false;
};

}  // namespace gsemo::objectives
