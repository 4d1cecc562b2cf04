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

#include "gsemo/core/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gsemo {

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : engine_(mix64(seed ^ mix64(stream + 0x632be59bd9b4e019ULL))) {}

std::uint64_t Rng::uniformIndex(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniformIndex bound must be positive");
  if (bound == 1) return 0;
  // Reject the lowest (2^64 mod bound) outputs so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

double Rng::normal() {
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace gsemo
