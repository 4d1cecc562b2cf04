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

#include "gsemo/diagnostics/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gsemo::diagnostics::bounds {
namespace {

void requireDomain(std::size_t k, double epsilon) {
  if (k < 1) throw std::domain_error("k must be >= 1");
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw std::domain_error("epsilon must lie in [0, 1)");
}

double shrink(std::size_t k) { return 1.0 - 1.0 / static_cast<double>(k); }

}  // namespace

double localOptimumFactor(double epsilon, std::size_t n) {
  return 1.0 / 3.0 - epsilon / static_cast<double>(n);
}

double additiveThreshold(std::size_t k, double epsilon, double opt) {
  return (1.0 - 1.0 / std::numbers::e) * (opt - static_cast<double>(k) * epsilon);
}

double additiveThresholdFinite(std::size_t k, double epsilon, double opt) {
  return submodularFactor(k) * (opt - static_cast<double>(k) * epsilon);
}

double ratioFactor(double gamma) { return 1.0 - std::exp(-gamma); }

double ratioFactorFinite(double gamma, std::size_t k) {
  const double kk = static_cast<double>(k);
  return 1.0 - std::pow(1.0 - gamma / kk, kk);
}

double multiplicativeFactor(std::size_t k, double epsilon) {
  requireDomain(k, epsilon);
  const double kk = static_cast<double>(k);
  const double q = (1.0 - epsilon) / (1.0 + epsilon);
  return (1.0 - std::pow(shrink(k), kk) * std::pow(q, kk)) /
         (1.0 + 2.0 * kk * epsilon / (1.0 - epsilon));
}

double multiplicativeFactorSeries(std::size_t k, double epsilon) {
  requireDomain(k, epsilon);
  const double kk = static_cast<double>(k);
  const double q = (1.0 - epsilon) / (1.0 + epsilon);
  const double ratio = shrink(k) * q;
  double sum = 0.0;
  double term = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    sum += term;
    term *= ratio;
  }
  return q / kk * sum;
}

double multiplicativeGreedyFactor(std::size_t k, double epsilon) {
  requireDomain(k, epsilon);
  const double kk = static_cast<double>(k);
  const double q = (1.0 - epsilon) / (1.0 + epsilon);
  return (1.0 - std::pow(shrink(k), kk) * std::pow(q, 2.0 * kk)) /
         (1.0 + 4.0 * kk * epsilon / ((1.0 - epsilon) * (1.0 - epsilon)));
}

double submodularFactor(std::size_t k) {
  const double kk = static_cast<double>(k);
  return 1.0 - std::pow(shrink(k), kk);
}

BoundComparison compareMultiplicativeBounds(std::size_t k, double epsilon) {
  BoundComparison c;
  c.ours = multiplicativeFactor(k, epsilon);
  c.greedyKnown = multiplicativeGreedyFactor(k, epsilon);
  c.dominates = c.ours >= c.greedyKnown;
  return c;
}

}  // namespace gsemo::diagnostics::bounds
