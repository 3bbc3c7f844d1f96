// Copyright 2026 The hitset Authors.
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

#ifndef HITSET_TOOLS_CLI_COMMANDS_HPP_
#define HITSET_TOOLS_CLI_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hitset::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kRunError = 2;

// Runs the `hitset` command line. args[0] is the program name. Reports go to
// `out` unless -o names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Seed used when --seed is absent: $HITSET_SEED if set, else 0.
std::uint64_t default_seed();

// Seed for trial i of a batch seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

}  // namespace hitset::cli

#endif  // HITSET_TOOLS_CLI_COMMANDS_HPP_
