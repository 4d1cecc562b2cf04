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

#include "gsemo/harness/seeds.hpp"

#include <charconv>
#include <set>
#include <string>

#include "gsemo/core/errors.hpp"

namespace gsemo::harness {
namespace {

std::uint64_t parseOne(std::string_view t) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || p != t.data() + t.size()) {
    throw ParseError("invalid seed '" + std::string(t) + "'");
  }
  return v;
}

}  // namespace

std::vector<std::uint64_t> parseSeeds(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  std::set<std::uint64_t> seen;
  auto add = [&](std::uint64_t s) {
    if (!seen.insert(s).second) throw ParseError("duplicate seed " + std::to_string(s));
    seeds.push_back(s);
  };
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const std::uint64_t lo = parseOne(item.substr(0, dots));
      const std::uint64_t hi = parseOne(item.substr(dots + 2));
      if (hi < lo) throw ParseError("empty seed range '" + std::string(item) + "'");
      if (hi - lo >= 1'000'000) throw ParseError("seed range too long");
      for (std::uint64_t s = lo;; ++s) {
        add(s);
        if (s == hi) break;
      }
    } else {
      add(parseOne(item));
    }
  }
  if (seeds.empty()) throw ParseError("seed list is empty");
  return seeds;
}

}  // namespace gsemo::harness
