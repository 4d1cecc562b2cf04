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
#include <random>
#include <string_view>

namespace gsemo {

/// Seedable, portable random stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The engine seed is derived from (seed, stream) through
/// SplitMix64 so that each run owns an independent stream. All derived draws
/// (bounded integers, Bernoulli, reals) use integer arithmetic written here
/// rather than std distributions, whose algorithms are implementation-defined.
class Rng {
 public:
  static constexpr std::string_view kName = "mt19937_64/splitmix64-stream-v1";

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform on {0, ..., bound-1} by unbiased rejection. bound >= 1.
  std::uint64_t uniformIndex(std::uint64_t bound);
  /// True with probability exactly 1/denominator.
  bool oneIn(std::uint64_t denominator) { return uniformIndex(denominator) == 0; }
  bool coin() { return (next() >> 63) != 0; }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Standard normal by the Box-Muller transform.
  double normal();

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; a bijective 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace gsemo
