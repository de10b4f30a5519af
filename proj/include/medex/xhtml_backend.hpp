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

#ifndef MEDEX_XHTML_BACKEND_HPP
#define MEDEX_XHTML_BACKEND_HPP

#include "medex/assets.hpp"
#include "medex/intermediate.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace medex {

inline constexpr std::string_view kXhtmlNamespace = "http://www.w3.org/1999/xhtml";
inline constexpr std::string_view kTimesheetNamespace = "http://www.w3.org/ns/SMIL";
inline constexpr std::string_view kHiddenClass = "medex-hidden";
inline constexpr std::string_view kCanvasId = "medex-canvas";

struct XhtmlBundle {
    std::string htmlBytes;
    std::string cssBytes;
    std::vector<ManifestEntry> manifest;
    std::string stylesheetRef = "styles.css";
    std::string schedulerRef = "scheduler.js";
};

/// XHTML 1.0 Strict page: nested absolutely positioned region divs, media as
/// img/audio/video or styled text, and an inline timesheet in the head that
/// the scheduler runtime interprets. All media start with the hidden class.
/// Throws InvariantViolation when the input does not validate.
XhtmlBundle emit_xhtml(const intermediate::IntermediateDocument& doc, const ExportOptions& options = {});

} // namespace medex

#endif // MEDEX_XHTML_BACKEND_HPP
