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

#include "gsemo/objectives/tabulated.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsemo::objectives {

ModularFunction::ModularFunction(std::vector<double> weights)
    : SetFunction(GroundSet(weights.size())),
      weights_(std::move(weights)),
      monotone_(std::all_of(weights_.begin(), weights_.end(), [](double w) { return w >= 0.0; })) {}

double ModularFunction::evaluate(const SubsetSolution& x) const {
  checkDomain(*this, x);
  double total = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (x.contains(i)) total += weights_[i];
  }
  return total;
}

TabulatedFunction::TabulatedFunction(std::size_t n, std::vector<double> values, bool monotone,
                                     bool nonNegative, std::string label)
    : SetFunction(GroundSet(n)),
      values_(std::move(values)),
      monotone_(monotone),
      nonNegative_(nonNegative),
      label_(std::move(label)) {
  if (n > 24) throw std::invalid_argument("tabulated functions are limited to n <= 24");
  if (values_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("tabulated function needs 2^n values");
  }
}

TabulatedFunction TabulatedFunction::from(std::size_t n,
                                          const std::function<double(const SubsetSolution&)>& fn,
                                          bool monotone, bool nonNegative) {
  std::vector<double> values(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < values.size(); ++m) values[m] = fn(SubsetSolution::fromMask(n, m));
  return TabulatedFunction(n, std::move(values), monotone, nonNegative);
}

double TabulatedFunction::evaluate(const SubsetSolution& x) const {
  checkDomain(*this, x);
  return values_[x.mask()];
}

}  // namespace gsemo::objectives
