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
#include <optional>
#include <vector>

#include "gsemo/core/dominance.hpp"
#include "gsemo/core/subset.hpp"

namespace gsemo {

/// The GSEMO population: mutually incomparable solutions under (f, -|x|).
///
/// Because the second objective takes only the n+1 values 0, -1, ..., -n and
/// stored solutions are pairwise incomparable, at most one solution per
/// subset size survives. Slots are therefore indexed by size.
class ParetoArchive {
 public:
  explicit ParetoArchive(std::size_t n);

  std::size_t n() const noexcept { return slots_.size() - 1; }
  /// Number of stored solutions.
  std::size_t occupancy() const noexcept { return occupancy_; }
  bool empty() const noexcept { return occupancy_ == 0; }

  const std::optional<SubsetSolution>& slot(std::size_t size) const { return slots_.at(size); }

  /// Offers y (with f(y) = value) to the archive.
  ///
  /// Rejected when some stored solution strictly dominates y. Otherwise every
  /// stored solution weakly dominated by y is dropped and y is stored; an equal
  /// objective vector is replaced by the newcomer.
  bool update(SubsetSolution y, double value);

  /// The r-th stored solution in increasing size order, r < occupancy().
  const SubsetSolution& nth(std::size_t r) const;

  /// Stored solutions in increasing size order.
  std::vector<const SubsetSolution*> solutions() const;

  /// Size-indexed stored values; empty slots are nullopt.
  std::vector<std::optional<double>> valueSummary() const;

  /// Exhaustive check of the archive invariants: slot/size agreement,
  /// pairwise incomparability, occupancy count.
  bool invariantsHold() const;

 private:
  std::vector<std::optional<SubsetSolution>> slots_;
  std::size_t occupancy_ = 0;
};

/// Solution with the largest f among stored solutions of size <= bound.
/// Ties go to the smaller size. Throws InvariantError when no stored solution
/// is eligible.
const SubsetSolution& bestFeasible(const ParetoArchive& archive, SizeBound bound);

}  // namespace gsemo
