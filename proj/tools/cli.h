// Copyright 2026 The pmgames Authors. All rights reserved.
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

#ifndef PMGAMES_TOOLS_CLI_H_
#define PMGAMES_TOOLS_CLI_H_

#include <iosfwd>

namespace pmgames::cli {

// Exit statuses besides the classify tags (0, 1, 2).
inline constexpr int kExitSelftestFailed = 3;
inline constexpr int kExitDomainError = 10;
inline constexpr int kExitWrongArity = 11;
inline constexpr int kExitNotReducible = 12;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitCannotCreate = 73;

// Entry point of the pmgames tool, with explicit streams for testing.
int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pmgames::cli

#endif  // PMGAMES_TOOLS_CLI_H_
