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

#include <gtest/gtest.h>

#include <vector>

#include "gsemo/core/errors.hpp"
#include "gsemo/core/subset.hpp"

namespace gsemo {
namespace {

TEST(SubsetSolution, BitStringRoundTrip) {
  const auto x = SubsetSolution::fromBitString("10110");
  EXPECT_EQ(x.n(), 5u);
  EXPECT_EQ(x.size(), 3u);
  EXPECT_TRUE(x.contains(0));
  EXPECT_FALSE(x.contains(1));
  EXPECT_EQ(x.toBitString(), "10110");
  EXPECT_EQ(x.mask(), 0b01101u);
}

TEST(SubsetSolution, RejectsBadBitString) {
  EXPECT_THROW(SubsetSolution::fromBitString("10a"), ParseError);
}

TEST(SubsetSolution, ComplementOfEmptyIsFull) {
  const SubsetSolution x(5);
  const SubsetSolution c = x.complement();
  EXPECT_EQ(c.size(), 5u);
  EXPECT_EQ(c.toBitString(), "11111");
}

TEST(SubsetSolution, ComplementIsAnInvolutionAcrossWords) {
  for (std::size_t n : {1u, 7u, 63u, 64u, 65u, 130u}) {
    SubsetSolution x(n);
    for (std::size_t i = 0; i < n; i += 3) x.insert(i);
    const SubsetSolution c = x.complement();
    EXPECT_EQ(x.size() + c.size(), n);
    EXPECT_TRUE(c.complement().sameSet(x));
    for (std::size_t i = 0; i < n; ++i) EXPECT_NE(x.contains(i), c.contains(i));
  }
}

TEST(SubsetSolution, WithWithoutAndIndices) {
  const auto x = SubsetSolution::fromIndices(70, std::vector<std::size_t>{2, 65});
  EXPECT_EQ(x.size(), 2u);
  EXPECT_EQ(x.with(3).size(), 3u);
  EXPECT_EQ(x.without(65).size(), 1u);
  EXPECT_EQ(x.with(2).size(), 2u);
  EXPECT_EQ(x.indices(), (std::vector<std::size_t>{2, 65}));
}

TEST(SubsetSolution, EditingDropsCachedValue) {
  SubsetSolution x(4);
  x.setCachedValue(3.0);
  ASSERT_TRUE(x.cachedValue());
  x.flip(1);
  EXPECT_FALSE(x.cachedValue());
  EXPECT_EQ(x.size(), 1u);
}

TEST(SubsetSolution, FullAndMask) {
  EXPECT_EQ(SubsetSolution::full(3).mask(), 7u);
  EXPECT_EQ(SubsetSolution::fromMask(4, 0b1010).toBitString(), "0101");
}

}  // namespace
}  // namespace gsemo
