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

/// Observations in rows, candidate variables in columns (row-major).
struct RegressionInstance {
  std::size_t rows = 0;
  std::size_t columns = 0;
  std::vector<double> design;  // rows * columns
  std::vector<double> target;  // rows

  double at(std::size_t r, std::size_t c) const { return design[r * columns + c]; }
  void validate() const;
  /// Subtracts column means from the design and the mean from the target.
  void center();
};

/// Squared multiple correlation of the least-squares fit of the target on the
/// selected columns. Monotone, in [0, 1], generally not submodular.
///
/// The Gram matrix and X'y are computed once. Each evaluation solves the
/// selected k x k normal equations by Cholesky elimination with a relative
/// pivot tolerance; rank-deficient selections fall back to the minimum-norm
/// solution through an eigendecomposition with small eigenvalues clipped.
class RegressionR2Function final : public SetFunction {
 public:
  static constexpr double kPivotTolerance = 1e-10;

  /// The instance is used as given; call RegressionInstance::center() first
  /// when the data is not centered. Throws std::invalid_argument with
  /// "degenerate target" when the target has zero variance.
  explicit RegressionR2Function(RegressionInstance inst);

  double evaluate(const SubsetSolution& x) const override;
  bool declaredMonotone() const noexcept override { return true; }
  bool declaredNonNegative() const noexcept override { return true; }
  std::string name() const override { return "regression"; }

  const RegressionInstance& instance() const noexcept { return inst_; }

 private:
  RegressionInstance inst_;
  std::vector<double> gram_;  // columns x columns
  std::vector<double> xty_;
  double yty_ = 0.0;
};

/// R^2 of the fit on the columns in x.
double regressionR2(const RegressionR2Function& f, const SubsetSolution& x);

}  // namespace gsemo::objectives
