// Copyright 2026 The Medex Authors
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

#ifndef MEDEX_CLI_HPP
#define MEDEX_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace medex::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitUsage = 3;

/// Runs one command. `args` excludes the program name. Diagnostics go to
/// `err` as `LEVEL CODE PATH MESSAGE` lines; primary output to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace medex::cli

#endif // MEDEX_CLI_HPP
