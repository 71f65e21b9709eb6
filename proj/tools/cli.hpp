// Copyright 2026 The minsvm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MINSVM_TOOLS_CLI_HPP
#define MINSVM_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace minsvm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;  // divergence, I/O
inline constexpr int kExitUsage = 2;  // bad flags or invalid input

/// Runs the `minsvm` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minsvm::cli

#endif  // MINSVM_TOOLS_CLI_HPP
