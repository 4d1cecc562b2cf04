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

#include "gsemo/core/archive.hpp"

#include <algorithm>
#include <stdexcept>

#include "gsemo/core/errors.hpp"

namespace gsemo {

ObjectiveVector objectiveVector(const SubsetSolution& x) {
  if (!x.cachedValue()) throw InvariantError("objective vector of an unevaluated solution");
  return {*x.cachedValue(), -static_cast<long>(x.size())};
}

ParetoArchive::ParetoArchive(std::size_t n) : slots_(n + 1) {}

bool ParetoArchive::update(SubsetSolution y, double value) {
  if (y.n() != n()) throw std::invalid_argument("solution and archive disagree on n");
  y.setCachedValue(value);
  const ObjectiveVector oy = objectiveVector(y);

  for (const auto& z : slots_) {
    if (z && dominates(objectiveVector(*z), oy)) return false;
  }
  for (auto& z : slots_) {
    if (z && weaklyDominates(oy, objectiveVector(*z))) {
      z.reset();
      --occupancy_;
    }
  }
  const std::size_t s = y.size();
  slots_[s] = std::move(y);
  ++occupancy_;
  return true;
}

const SubsetSolution& ParetoArchive::nth(std::size_t r) const {
  for (const auto& z : slots_) {
    if (!z) continue;
    if (r == 0) return *z;
    --r;
  }
  throw std::out_of_range("archive index out of range");
}

std::vector<const SubsetSolution*> ParetoArchive::solutions() const {
  std::vector<const SubsetSolution*> out;
  out.reserve(occupancy_);
  for (const auto& z : slots_) {
    if (z) out.push_back(&*z);
  }
  return out;
}

std::vector<std::optional<double>> ParetoArchive::valueSummary() const {
  std::vector<std::optional<double>> out(slots_.size());
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    if (slots_[s]) out[s] = slots_[s]->cachedValue();
  }
  return out;
}

bool ParetoArchive::invariantsHold() const {
  std::size_t count = 0;
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    if (!slots_[s]) continue;
    ++count;
    if (slots_[s]->size() != s || !slots_[s]->cachedValue()) return false;
  }
  if (count != occupancy_ || count > n() + 1) return false;
  const auto all = solutions();
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (!incomparable(objectiveVector(*all[i]), objectiveVector(*all[j]))) return false;
    }
  }
  return true;
}

const SubsetSolution& bestFeasible(const ParetoArchive& archive, SizeBound bound) {
  const std::size_t last = bound ? std::min(*bound, archive.n()) : archive.n();
  const SubsetSolution* best = nullptr;
  for (std::size_t s = 0; s <= last; ++s) {
    const auto& z = archive.slot(s);
    // Strict '>' keeps the smaller size on ties.
    if (z && (best == nullptr || *z->cachedValue() > *best->cachedValue())) best = &*z;
  }
  if (best == nullptr) {
    throw InvariantError("archive holds no solution within the size bound");
  }
  return *best;
}

}  // namespace gsemo
