// Copyright 2026 The ghzlhv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GHZLHV_TOOLS_CLI_COMMANDS_HPP
#define GHZLHV_TOOLS_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ghz::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInputError = 2,
  kCapExceeded = 3,
  kIterationLimit = 4,
};

/// Environment variable overriding the strategy enumeration cap (log2 of the
/// raw strategy count).
inline constexpr const char* kEnumCapVariable = "GHZLHV_ENUM_CAP";

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ghz::cli

#endif  // GHZLHV_TOOLS_CLI_COMMANDS_HPP
