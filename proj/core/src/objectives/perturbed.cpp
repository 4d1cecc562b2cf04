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

#include "gsemo/objectives/perturbed.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "gsemo/core/errors.hpp"
#include "gsemo/core/random.hpp"

namespace gsemo::objectives {

std::string_view toString(PerturbationMode mode) {
  return mode == PerturbationMode::Additive ? "additive" : "multiplicative";
}

PerturbationMode parsePerturbationMode(std::string_view text) {
  if (text == "additive") return PerturbationMode::Additive;
  if (text == "multiplicative") return PerturbationMode::Multiplicative;
  throw ParseError("unknown perturbation mode '" + std::string(text) + "'");
}

double perturbationNoise(const SubsetSolution& x, std::uint64_t seed) {
  if (x.empty()) return 0.0;
  std::uint64_t h = mix64(seed ^ 0x5851f42d4c957f2dULL) ^ x.n();
  for (std::uint64_t w : x.words()) h = mix64(h ^ w);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

bool isMonotoneExhaustive(const SetFunction& f, double tolerance) {
  const std::size_t n = f.n();
  if (n > 24) throw GuardError("exhaustive monotonicity check limited to n <= 24");
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < table.size(); ++m) {
    table[m] = f.evaluate(SubsetSolution::fromMask(n, m));
  }
  for (std::uint64_t m = 0; m < table.size(); ++m) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if ((m & bit) == 0 && table[m | bit] < table[m] - tolerance) return false;
    }
  }
  return true;
}

PerturbedFunction::PerturbedFunction(SetFunctionPtr base, PerturbationSpec spec)
    : SetFunction(base ? base->groundSet() : GroundSet(1)),
      base_(std::move(base)),
      spec_(spec) {
  if (!base_) throw std::invalid_argument("perturbation needs a base function");
  if (!base_->declaredMonotone()) {
    throw std::invalid_argument("perturbation base must be monotone submodular");
  }
  if (!(spec_.epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  if (spec_.mode == PerturbationMode::Multiplicative && spec_.epsilon >= 1.0) {
    throw std::invalid_argument("multiplicative epsilon must be < 1");
  }
  if (spec_.epsilon == 0.0) {
    monotone_ = true;
    return;
  }
  const bool small = n() <= kMonotoneCheckLimit;
  if (spec_.mode == PerturbationMode::Additive) {
    if (small && !isMonotoneExhaustive(*this)) {
      throw std::invalid_argument("monotonicity violated at eps = " +
                                  std::to_string(spec_.epsilon));
    }
    monotone_ = true;
  } else {
    monotone_ = small && isMonotoneExhaustive(*this);
  }
}

double PerturbedFunction::evaluate(const SubsetSolution& x) const {
  const double g = base_->evaluate(x);
  if (spec_.epsilon == 0.0) return g;
  const double u = perturbationNoise(x, spec_.perturbSeed);
  if (spec_.mode == PerturbationMode::Additive) return g + 0.5 * spec_.epsilon * u;
  return g * (1.0 + spec_.epsilon * (2.0 * u - 1.0));
}

std::string PerturbedFunction::name() const {
  return base_->name() + "+" + std::string(toString(spec_.mode));
}

}  // namespace gsemo::objectives
