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

#include "gsemo/objectives/regression.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gsemo::objectives {

void RegressionInstance::validate() const {
  if (rows == 0) throw std::invalid_argument("regression instance needs at least one row");
  if (columns == 0) throw std::invalid_argument("regression instance needs at least one column");
  if (design.size() != rows * columns) throw std::invalid_argument("design matrix size mismatch");
  if (target.size() != rows) throw std::invalid_argument("target length must equal row count");
}

void RegressionInstance::center() {
  for (std::size_t c = 0; c < columns; ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < rows; ++r) mean += at(r, c);
    mean /= static_cast<double>(rows);
    for (std::size_t r = 0; r < rows; ++r) design[r * columns + c] -= mean;
  }
  double mean = 0.0;
  for (double y : target) mean += y;
  mean /= static_cast<double>(rows);
  for (double& y : target) y -= mean;
}

RegressionR2Function::RegressionR2Function(RegressionInstance inst)
    : SetFunction(GroundSet(inst.columns)), inst_(std::move(inst)) {
  inst_.validate();
  const std::size_t p = inst_.columns;
  gram_.assign(p * p, 0.0);
  xty_.assign(p, 0.0);
  for (std::size_t r = 0; r < inst_.rows; ++r) {
    for (std::size_t i = 0; i < p; ++i) {
      const double xi = inst_.at(r, i);
      xty_[i] += xi * inst_.target[r];
      for (std::size_t j = i; j < p; ++j) gram_[i * p + j] += xi * inst_.at(r, j);
    }
    yty_ += inst_.target[r] * inst_.target[r];
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < i; ++j) gram_[i * p + j] = gram_[j * p + i];
  }
  if (!(yty_ > 0.0)) throw std::invalid_argument("degenerate target");
}

namespace {

// b' G^+ b for symmetric positive semi-definite G.
double explainedSumOfSquares(const Eigen::MatrixXd& g, const Eigen::VectorXd& b) {
  const Eigen::Index k = g.rows();
  const double maxDiag = g.diagonal().maxCoeff();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(k, k);
  bool fullRank = maxDiag > 0.0;
  for (Eigen::Index j = 0; j < k && fullRank; ++j) {
    double d = g(j, j);
    for (Eigen::Index m = 0; m < j; ++m) d -= l(j, m) * l(j, m);
    if (d <= RegressionR2Function::kPivotTolerance * maxDiag) {
      fullRank = false;
      break;
    }
    l(j, j) = std::sqrt(d);
    for (Eigen::Index i = j + 1; i < k; ++i) {
      double s = g(i, j);
      for (Eigen::Index m = 0; m < j; ++m) s -= l(i, m) * l(j, m);
      l(i, j) = s / l(j, j);
    }
  }
  if (fullRank) {
    // G = L L', so b' G^-1 b = |L^-1 b|^2.
    const Eigen::VectorXd z = l.triangularView<Eigen::Lower>().solve(b);
    return z.squaredNorm();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const double cutoff = RegressionR2Function::kPivotTolerance * std::max(lambda.maxCoeff(), 0.0);
  const Eigen::VectorXd proj = eig.eigenvectors().transpose() * b;
  double ess = 0.0;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (lambda(i) > cutoff && lambda(i) > 0.0) ess += proj(i) * proj(i) / lambda(i);
  }
  return ess;
}

}  // namespace

double RegressionR2Function::evaluate(const SubsetSolution& x) const {
  checkDomain(*this, x);
  if (x.empty()) return 0.0;
  const auto idx = x.indices();
  const auto k = static_cast<Eigen::Index>(idx.size());
  const std::size_t p = inst_.columns;
  Eigen::MatrixXd g(k, k);
  Eigen::VectorXd b(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    b(i) = xty_[idx[static_cast<std::size_t>(i)]];
    for (Eigen::Index j = 0; j < k; ++j) {
      g(i, j) = gram_[idx[static_cast<std::size_t>(i)] * p + idx[static_cast<std::size_t>(j)]];
    }
  }
  return std::clamp(explainedSumOfSquares(g, b) / yty_, 0.0, 1.0);
}

double regressionR2(const RegressionR2Function& f, const SubsetSolution& x) {
  return f.evaluate(x);
}

}  // namespace gsemo::objectives
