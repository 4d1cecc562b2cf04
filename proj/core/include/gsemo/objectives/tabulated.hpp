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

#include <functional>
#include <vector>

#include "gsemo/objectives/set_function.hpp"

namespace gsemo::objectives {

/// f(X) = sum of weights over X. Weights may be negative.
class ModularFunction final : public SetFunction {
 public:
  explicit ModularFunction(std::vector<double> weights);

  double evaluate(const SubsetSolution& x) const override;
  bool declaredMonotone() const noexcept override { return monotone_; }
  bool declaredNonNegative() const noexcept override { return monotone_; }
  std::string name() const override { return "modular"; }

  const std::vector<double>& weights() const noexcept { return weights_; }

 private:
  std::vector<double> weights_;
  bool monotone_;
};

/// Explicit value table indexed by the subset bitmask (n <= 24).
///
/// Properties are whatever the caller declares; diagnostics can certify them.
class TabulatedFunction final : public SetFunction {
 public:
  TabulatedFunction(std::size_t n, std::vector<double> values, bool monotone,
                    bool nonNegative, std::string label = "tabulated");

  /// Tabulates any callable over all 2^n subsets.
  static TabulatedFunction from(std::size_t n,
                                const std::function<double(const SubsetSolution&)>& fn,
                                bool monotone, bool nonNegative);

  double evaluate(const SubsetSolution& x) const override;
  bool declaredMonotone() const noexcept override { return monotone_; }
  bool declaredNonNegative() const noexcept override { return nonNegative_; }
  std::string name() const override { return label_; }

 private:
  std::vector<double> values_;
  bool monotone_;
  bool nonNegative_;
  std::string label_;
};

}  // namespace gsemo::objectives
