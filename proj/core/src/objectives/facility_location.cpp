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

#include "gsemo/objectives/facility_location.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gsemo::objectives {

void FacilityLocationInstance::validate() const {
  if (facilityCosts.empty()) throw std::invalid_argument("facility instance has no facilities");
  for (const auto& row : benefit) {
    if (row.size() != facilityCosts.size()) {
      throw std::invalid_argument("benefit matrix is not rectangular");
    }
    for (double b : row) {
      if (!(b >= 0.0)) throw std::invalid_argument("benefits must be >= 0");
    }
  }
  for (double c : facilityCosts) {
    if (!(c >= 0.0)) throw std::invalid_argument("facility costs must be >= 0");
  }
}

double facilityLocationValue(const FacilityLocationInstance& inst, const SubsetSolution& x) {
  double total = 0.0;
  for (const auto& row : inst.benefit) {
    double best = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (x.contains(j)) best = std::max(best, row[j]);
    }
    total += best;
  }
  for (std::size_t j = 0; j < inst.facilityCosts.size(); ++j) {
    if (x.contains(j)) total -= inst.facilityCosts[j];
  }
  return total;
}

FacilityLocationFunction::FacilityLocationFunction(FacilityLocationInstance inst)
    : SetFunction(GroundSet(inst.facilities())), inst_(std::move(inst)) {
  inst_.validate();
  const std::size_t m = inst_.facilities();
  monotone_ = std::all_of(inst_.facilityCosts.begin(), inst_.facilityCosts.end(),
                          [](double c) { return c == 0.0; });
  if (monotone_) {
    nonNegative_ = true;
    return;
  }
  // Any non-empty X contains some j, and f(X) >= colSum(j) - totalCost.
  double totalCost = 0.0;
  for (double c : inst_.facilityCosts) totalCost += c;
  double minColumn = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < m; ++j) {
    double col = 0.0;
    for (const auto& row : inst_.benefit) col += row[j];
    minColumn = std::min(minColumn, col);
  }
  if (totalCost <= minColumn) {
    nonNegative_ = true;
    return;
  }
  if (m <= kExhaustiveLimit) {
    nonNegative_ = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      if (facilityLocationValue(inst_, SubsetSolution::fromMask(m, mask)) < 0.0) {
        nonNegative_ = false;
        break;
      }
    }
  }
}

double FacilityLocationFunction::evaluate(const SubsetSolution& x) const {
  checkDomain(*this, x);
  const double v = facilityLocationValue(inst_, x);
  // Never changes a certified non-negative value.
  return nonNegative_ ? std::max(v, 0.0) : v;
}

}  // namespace gsemo::objectives
