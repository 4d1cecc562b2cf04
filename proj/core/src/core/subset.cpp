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

#include "gsemo/core/subset.hpp"

#include <bit>
#include <stdexcept>

#include "gsemo/core/errors.hpp"

namespace gsemo {

GroundSet::GroundSet(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("ground set must be non-empty");
}

GroundSet::GroundSet(std::size_t n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n == 0) throw std::invalid_argument("ground set must be non-empty");
  if (!labels_.empty() && labels_.size() != n) {
    throw std::invalid_argument("ground set labels must have exactly n entries");
  }
}

std::string GroundSet::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "v" + std::to_string(i);
}

namespace {

std::size_t wordCount(std::size_t n) {
  return (n + SubsetSolution::kWordBits - 1) / SubsetSolution::kWordBits;
}

}  // namespace

SubsetSolution::SubsetSolution(std::size_t n) : n_(n), words_(wordCount(n), 0) {}

SubsetSolution SubsetSolution::fromMask(std::size_t n, std::uint64_t mask) {
  if (n > kWordBits) throw std::invalid_argument("fromMask requires n <= 64");
  SubsetSolution s(n);
  if (n == 0) return s;
  if (n < kWordBits) mask &= (std::uint64_t{1} << n) - 1;
  s.words_[0] = mask;
  s.recount();
  return s;
}

SubsetSolution SubsetSolution::fromIndices(std::size_t n,
                                           std::span<const std::size_t> indices) {
  SubsetSolution s(n);
  for (std::size_t i : indices) {
    if (i >= n) throw std::out_of_range("element index out of range");
    s.insert(i);
  }
  return s;
}

SubsetSolution SubsetSolution::full(std::size_t n) { return SubsetSolution(n).complement(); }

SubsetSolution SubsetSolution::fromBitString(std::string_view bits) {
  SubsetSolution s(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      s.insert(i);
    } else if (bits[i] != '0') {
      throw ParseError("bit string may contain only '0' and '1'");
    }
  }
  return s;
}

void SubsetSolution::set(std::size_t i, bool member) {
  Word& w = words_[i / kWordBits];
  const Word bit = Word{1} << (i % kWordBits);
  const bool was = (w & bit) != 0;
  if (was == member) return;
  w ^= bit;
  size_ = member ? size_ + 1 : size_ - 1;
  value_.reset();
}

void SubsetSolution::flip(std::size_t i) { set(i, !contains(i)); }

SubsetSolution SubsetSolution::complement() const {
  SubsetSolution c(n_);
  for (std::size_t w = 0; w < words_.size(); ++w) c.words_[w] = ~words_[w];
  if (const std::size_t tail = n_ % kWordBits; tail != 0) {
    c.words_.back() &= (Word{1} << tail) - 1;
  }
  c.size_ = n_ - size_;
  return c;
}

SubsetSolution SubsetSolution::with(std::size_t i) const {
  SubsetSolution s = *this;
  s.insert(i);
  return s;
}

SubsetSolution SubsetSolution::without(std::size_t i) const {
  SubsetSolution s = *this;
  s.erase(i);
  return s;
}

std::vector<std::size_t> SubsetSolution::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string SubsetSolution::toBitString() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (contains(i)) s[i] = '1';
  }
  return s;
}

void SubsetSolution::recount() noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  size_ = c;
}

}  // namespace gsemo
