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

#include <cstdint>
#include <string_view>

#include "gsemo/objectives/set_function.hpp"

namespace gsemo::objectives {

enum class PerturbationMode { Additive, Multiplicative };

std::string_view toString(PerturbationMode mode);
/// Accepts "additive" / "multiplicative"; throws ParseError otherwise.
PerturbationMode parsePerturbationMode(std::string_view text);

struct PerturbationSpec {
  PerturbationMode mode = PerturbationMode::Additive;
  double epsilon = 0.0;
  std::uint64_t perturbSeed = 0;
};

/// Keyed hash of the subset's bit pattern mapped to [0, 1); 0 on the empty set.
double perturbationNoise(const SubsetSolution& x, std::uint64_t seed);

/// A monotone submodular base g with deterministic, bounded noise.
///
/// Additive:        f(X) = g(X) + (eps/2) u(X).
///   Every marginal moves by at most eps/2, so diminishing returns holds up
///   to slack eps. The result must stay monotone; for n <= kMonotoneCheckLimit
///   this is verified exhaustively and violation throws std::invalid_argument
///   ("monotonicity violated at eps"). Larger instances require eps/2 below
///   the smallest marginal of g.
/// Multiplicative:  f(X) = g(X) (1 + eps (2 u(X) - 1)), eps < 1.
///   (1-eps) g <= f <= (1+eps) g with g as witness. f need not be monotone;
///   it is declared monotone only when verified exhaustively.
class PerturbedFunction final : public SetFunction {
 public:
  static constexpr std::size_t kMonotoneCheckLimit = 12;

  PerturbedFunction(SetFunctionPtr base, PerturbationSpec spec);

  double evaluate(const SubsetSolution& x) const override;
  bool declaredMonotone() const noexcept override { return monotone_; }
  bool declaredNonNegative() const noexcept override { return true; }
  std::string name() const override;

  const SetFunction& witness() const noexcept { return *base_; }
  const PerturbationSpec& spec() const noexcept { return spec_; }

 private:
  SetFunctionPtr base_;
  PerturbationSpec spec_;
  bool monotone_ = false;
};

/// Exhaustive single-element monotonicity check; n must be small.
bool isMonotoneExhaustive(const SetFunction& f, double tolerance = 0.0);

}  // namespace gsemo::objectives
