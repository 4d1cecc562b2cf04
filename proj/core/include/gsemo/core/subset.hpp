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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gsemo {

/// The ground set V = {v_0, ..., v_{n-1}}; elements are addressed by index.
class GroundSet {
 public:
  explicit GroundSet(std::size_t n);
  GroundSet(std::size_t n, std::vector<std::string> labels);

  std::size_t size() const noexcept { return n_; }
  bool hasLabels() const noexcept { return !labels_.empty(); }
  /// Display label of element i; falls back to "v<i>".
  std::string label(std::size_t i) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::size_t n_;
  std::vector<std::string> labels_;
};

/// Upper bound on subset size; std::nullopt means unbounded.
using SizeBound = std::optional<std::size_t>;
inline constexpr SizeBound kUnbounded = std::nullopt;

/// A subset of the ground set stored as a packed bit vector, together with
/// its popcount and the last objective value computed for it.
///
/// Bit i of word i/64 is the membership of element i. Bits past n are kept
/// zero so that word-wise comparison and hashing are canonical.
class SubsetSolution {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  SubsetSolution() = default;
  /// Empty subset over n elements.
  explicit SubsetSolution(std::size_t n);

  /// Subset given by the low n bits of mask (n <= 64).
  static SubsetSolution fromMask(std::size_t n, std::uint64_t mask);
  /// Subset containing exactly the listed elements.
  static SubsetSolution fromIndices(std::size_t n, std::span<const std::size_t> indices);
  static SubsetSolution full(std::size_t n);
  /// Parses a '0'/'1' string; character i is element i.
  static SubsetSolution fromBitString(std::string_view bits);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool contains(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i, bool member);
  void insert(std::size_t i) { set(i, true); }
  void erase(std::size_t i) { set(i, false); }
  void flip(std::size_t i);

  /// V \ this, with size n - size().
  SubsetSolution complement() const;
  SubsetSolution with(std::size_t i) const;
  SubsetSolution without(std::size_t i) const;

  std::span<const Word> words() const noexcept { return words_; }
  /// Low 64 bits; the whole subset when n <= 64.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }
  std::vector<std::size_t> indices() const;
  std::string toBitString() const;

  const std::optional<double>& cachedValue() const noexcept { return value_; }
  void setCachedValue(double v) noexcept { value_ = v; }
  void clearCachedValue() noexcept { value_.reset(); }

  /// Compares membership only; the cached value is ignored.
  bool sameSet(const SubsetSolution& other) const noexcept {
    return n_ == other.n_ && words_ == other.words_;
  }
  /// Full equality including the cached value.
  friend bool operator==(const SubsetSolution&, const SubsetSolution&) = default;

 private:
  void recount() noexcept;

  std::size_t n_ = 0;
  std::size_t size_ = 0;
  std::vector<Word> words_;
  std::optional<double> value_;
};

}  // namespace gsemo
