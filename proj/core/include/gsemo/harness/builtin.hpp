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

#include <string>
#include <vector>

#include "gsemo/objectives/perturbed.hpp"
#include "gsemo/objectives/set_function.hpp"

// Built-in instances for the verification suites. Every generator seed is
// fixed here so that verification needs no data files.
namespace gsemo::harness::builtin {

struct NamedFunction {
  std::string name;
  objectives::SetFunctionPtr f;
};

/// Five G(12, 0.5) graphs: three with unit weights, two with integer
/// weights in [1, 5].
std::vector<NamedFunction> maxCutGraphs12();

/// Non-negative submodular functions with n <= maxN: cuts, facility
/// location with and without opening costs, coverage.
std::vector<NamedFunction> nonNegativeSubmodular(std::size_t maxN);

/// Monotone submodular functions with n <= maxN: coverage and cost-free
/// facility location.
std::vector<NamedFunction> monotoneSubmodular(std::size_t maxN);

/// Coverage with a private unit-weight item per element (every marginal
/// gain >= 1) on n elements.
objectives::SetFunctionPtr privateCoverage(std::size_t n, std::uint64_t seed,
                                           double privateWeight = 1.0);

objectives::SetFunctionPtr perturbedCoverage(std::size_t n, objectives::PerturbationMode mode,
                                             double epsilon, std::uint64_t seed,
                                             double privateWeight = 1.0);

/// Centered Gaussian regression with `columns` candidate variables.
objectives::SetFunctionPtr regression(std::size_t rows, std::size_t columns, std::uint64_t seed);

/// Every built-in family member with n <= maxN, for property sweeps.
std::vector<NamedFunction> everything(std::size_t maxN);

}  // namespace gsemo::harness::builtin
