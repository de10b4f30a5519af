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

#ifndef MEDEX_TIMELINE_ORACLE_HPP
#define MEDEX_TIMELINE_ORACLE_HPP

#include "medex/activation.hpp"
#include "medex/source.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Brute-force reference semantics for source timing. The simulation steps a
// discrete clock one millisecond at a time and drives a per-object
// idle -> active -> done state machine straight from the source tree; it
// shares no code with the resolver.

namespace medex {

struct ClickEvent {
    std::int64_t atMs = 0;
    std::string targetId;
};

struct OracleOptions {
    /// Concrete durations for audio/video objects whose duration is
    /// intrinsic (dur=media or unspecified). Every such object must appear.
    std::map<std::string, std::int64_t> mediaDurations;
    /// Last simulated millisecond; derived from the document when absent.
    /// Activations still running at the horizon end in kOpenEnd.
    std::optional<std::int64_t> horizonMs;
};

/// Throws medex::Error("MissingFixture") when an intrinsic duration has no
/// fixture value.
ActivationTable timeline_oracle(const source::SourceDocument& doc, const std::vector<ClickEvent>& events,
                                const OracleOptions& options = {});

} // namespace medex

#endif // MEDEX_TIMELINE_ORACLE_HPP
