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

#ifndef MEDEX_CLOCK_VALUE_HPP
#define MEDEX_CLOCK_VALUE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace medex {

/// Source-format clock value: `Nms`, `Ns` or `N.Ns`. Sub-millisecond
/// remainders are truncated. Returns nullopt on any other syntax.
std::optional<std::int64_t> parse_source_clock(std::string_view text);

/// SMIL clock value: full clock (`hh:mm:ss[.f]`), partial clock
/// (`mm:ss[.f]`) or timecount with optional metric (`h`, `min`, `s`, `ms`;
/// seconds when absent). Leading/trailing whitespace is ignored.
std::optional<std::int64_t> parse_smil_clock(std::string_view text);

/// `5000` -> `5000ms`.
std::string format_ms(std::int64_t ms);

} // namespace medex

#endif // MEDEX_CLOCK_VALUE_HPP
