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

// Closed-form approximation guarantees, as fractions of OPT unless noted.
namespace gsemo::diagnostics::bounds {

/// 1/3 - eps/n: the unconstrained non-monotone submodular guarantee reached
/// by an approximate local optimum (and by GSEMO).
double localOptimumFactor(double epsilon, std::size_t n);

/// Additive eps-approximate submodularity, size bound k. These return an
/// absolute value threshold, not a fraction:
///   stated:  (1 - 1/e) (OPT - k eps)
///   finite:  (1 - (1 - 1/k)^k) (OPT - k eps)
double additiveThreshold(std::size_t k, double epsilon, double opt);
double additiveThresholdFinite(std::size_t k, double epsilon, double opt);

/// Submodularity ratio gamma_min:
///   stated:  1 - e^{-gamma}
///   finite:  1 - (1 - gamma/k)^k
double ratioFactor(double gamma);
double ratioFactorFinite(double gamma, std::size_t k);

/// Multiplicative eps-approximate submodularity, GSEMO guarantee:
///   1/(1 + 2k eps/(1-eps)) * (1 - (1-1/k)^k ((1-eps)/(1+eps))^k)
double multiplicativeFactor(std::size_t k, double epsilon);
/// The same quantity as the geometric sum
///   (1-eps)/(k(1+eps)) * sum_{i<k} ((1-1/k)(1-eps)/(1+eps))^i.
double multiplicativeFactorSeries(std::size_t k, double epsilon);
/// Known greedy guarantee for the same setting:
///   1/(1 + 4k eps/(1-eps)^2) * (1 - (1-1/k)^k ((1-eps)/(1+eps))^{2k})
double multiplicativeGreedyFactor(std::size_t k, double epsilon);

/// 1 - (1 - 1/k)^k, the common value of every size-constrained guarantee
/// when f is submodular.
double submodularFactor(std::size_t k);

struct BoundComparison {
  double ours = 0.0;
  double greedyKnown = 0.0;
  bool dominates = false;
};

/// Evaluates multiplicativeFactor and multiplicativeGreedyFactor and whether
/// the former is at least the latter. Requires k >= 1 and 0 <= eps < 1;
/// throws std::domain_error otherwise.
BoundComparison compareMultiplicativeBounds(std::size_t k, double epsilon);

}  // namespace gsemo::diagnostics::bounds
