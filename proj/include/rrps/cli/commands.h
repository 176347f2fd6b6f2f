// Copyright 2026 The RRPS Arena Authors.
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

#ifndef RRPS_CLI_COMMANDS_H_
#define RRPS_CLI_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "rrps/cli/run_config.h"

namespace rrps::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

const char* Version();

// Runs one validated command. Human-readable results go to `out`; files go
// under config.out. Returns the paths written, manifest last.
std::vector<std::string> RunCommand(const RunConfig& config, std::istream& in,
                                    std::ostream& out);

// The whole program: parses argv, resolves the config (defaults, then the
// seed environment value, then --config, then flags), echoes it, runs the
// command and maps failures to exit codes.
int Main(int argc, const char* const* argv, std::istream& in,
         std::ostream& out, std::ostream& err, const char* env_seed);

}  // namespace rrps::cli

#endif  // RRPS_CLI_COMMANDS_H_
