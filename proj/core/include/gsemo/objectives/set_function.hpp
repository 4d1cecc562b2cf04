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
#include <memory>
#include <string>

#include "gsemo/core/subset.hpp"

namespace gsemo::objectives {

/// A set function f : 2^V -> R accessed through a value oracle.
///
/// Implementations are immutable after construction and evaluate
/// deterministically, so one instance may be shared by concurrent runs. Call
/// accounting lives in CountedOracle, which each run owns.
class SetFunction {
 public:
  virtual ~SetFunction() = default;

  const GroundSet& groundSet() const noexcept { return ground_; }
  std::size_t n() const noexcept { return ground_.size(); }

  /// f(x). x must be a subset of this function's ground set.
  virtual double evaluate(const SubsetSolution& x) const = 0;

  /// Monotone functions are also normalized: f(empty) = 0.
  virtual bool declaredMonotone() const noexcept = 0;
  virtual bool declaredNonNegative() const noexcept = 0;
  virtual std::string name() const = 0;

 protected:
  explicit SetFunction(GroundSet ground) : ground_(std::move(ground)) {}

 private:
  GroundSet ground_;
};

using SetFunctionPtr = std::shared_ptr<const SetFunction>;

/// Per-run view of a SetFunction that counts evaluations.
class CountedOracle {
 public:
  explicit CountedOracle(const SetFunction& f) : f_(&f) {}

  double operator()(const SubsetSolution& x) {
    ++calls_;
    return f_->evaluate(x);
  }
  /// Evaluates and stores the value in x.
  double evaluateInto(SubsetSolution& x) {
    const double v = (*this)(x);
    x.setCachedValue(v);
    return v;
  }

  std::uint64_t calls() const noexcept { return calls_; }
  const SetFunction& function() const noexcept { return *f_; }
  std::size_t n() const noexcept { return f_->n(); }

 private:
  const SetFunction* f_;
  std::uint64_t calls_ = 0;
};

/// Decorator that counts evaluate() calls on a wrapped function. Not for
/// concurrent use; give each run its own instance.
class CallCountingFunction final : public SetFunction {
 public:
  explicit CallCountingFunction(const SetFunction& inner)
      : SetFunction(inner.groundSet()), inner_(&inner) {}

  double evaluate(const SubsetSolution& x) const override {
    ++calls_;
    return inner_->evaluate(x);
  }
  bool declaredMonotone() const noexcept override { return inner_->declaredMonotone(); }
  bool declaredNonNegative() const noexcept override { return inner_->declaredNonNegative(); }
  std::string name() const override { return inner_->name(); }

  std::uint64_t calls() const noexcept { return calls_; }

 private:
  const SetFunction* inner_;
  mutable std::uint64_t calls_ = 0;
};

/// Throws std::invalid_argument when x is over a different ground set size.
void checkDomain(const SetFunction& f, const SubsetSolution& x);

}  // namespace gsemo::objectives
