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

#include "gsemo/objectives/coverage.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace gsemo::objectives {

void CoverageInstance::validate() const {
  if (coveredBy.empty()) throw std::invalid_argument("coverage instance has no elements");
  if (itemWeights.size() != universe) {
    throw std::invalid_argument("coverage instance needs one weight per universe item");
  }
  for (std::size_t i = 0; i < coveredBy.size(); ++i) {
    for (std::size_t item : coveredBy[i]) {
      if (item >= universe) {
        throw std::invalid_argument("element " + std::to_string(i) + " covers item " +
                                    std::to_string(item) + " outside the universe");
      }
    }
  }
  for (double w : itemWeights) {
    if (!(w >= 0.0)) throw std::invalid_argument("coverage item weights must be >= 0");
  }
}

double coverageValue(const CoverageInstance& inst, const SubsetSolution& x) {
  std::vector<bool> covered(inst.universe, false);
  for (std::size_t i = 0; i < inst.coveredBy.size(); ++i) {
    if (!x.contains(i)) continue;
    for (std::size_t item : inst.coveredBy[i]) covered[item] = true;
  }
  double total = 0.0;
  for (std::size_t j = 0; j < inst.universe; ++j) {
    if (covered[j]) total += inst.itemWeights[j];
  }
  return total;
}

CoverageFunction::CoverageFunction(CoverageInstance inst)
    : SetFunction(GroundSet(inst.coveredBy.size())), inst_(std::move(inst)) {
  inst_.validate();
  const std::size_t words = (inst_.universe + 63) / 64;
  masks_.assign(inst_.coveredBy.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < inst_.coveredBy.size(); ++i) {
    for (std::size_t item : inst_.coveredBy[i]) masks_[i][item / 64] |= std::uint64_t{1} << (item % 64);
  }
}

double CoverageFunction::evaluate(const SubsetSolution& x) const {
  checkDomain(*this, x);
  std::vector<std::uint64_t> covered(masks_.empty() ? 0 : masks_.front().size(), 0);
  for (std::size_t i = 0; i < masks_.size(); ++i) {
    if (!x.contains(i)) continue;
    for (std::size_t w = 0; w < covered.size(); ++w) covered[w] |= masks_[i][w];
  }
  // Sum in item order so the result matches coverageValue bit for bit.
  double total = 0.0;
  for (std::size_t w = 0; w < covered.size(); ++w) {
    std::uint64_t bits = covered[w];
    while (bits != 0) {
      const int b = std::countr_zero(bits);
      total += inst_.itemWeights[w * 64 + static_cast<std::size_t>(b)];
      bits &= bits - 1;
    }
  }
  return total;
}

}  // namespace gsemo::objectives
