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

#include <iosfwd>

namespace gsemo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitInvariant = 4;

/// Entry point of the gsemo tool. Subcommands: run, verify, diagnose, opt.
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gsemo::cli
