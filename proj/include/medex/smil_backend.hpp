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

#ifndef MEDEX_SMIL_BACKEND_HPP
#define MEDEX_SMIL_BACKEND_HPP

#include "medex/assets.hpp"
#include "medex/intermediate.hpp"
#include "medex/png.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace medex {

inline constexpr std::string_view kSmil21Namespace = "http://www.w3.org/2005/SMIL21/Language";

struct SmilBundle {
    std::string documentBytes;
    /// Generated PNGs (with contents) followed by media copy jobs.
    std::vector<ManifestEntry> manifest;
};

/// SMIL 2.1 Language presentation: head metadata, nested regions in
/// relative pixels, the timing tree as par/seq/excl with media bound to
/// regions. Text objects become `<img>` elements over rasterized PNGs.
/// Throws InvariantViolation when the input does not validate and
/// RasterizeError when the rasterizer fails.
SmilBundle emit_smil(const intermediate::IntermediateDocument& doc, const Rasterizer& rasterizer,
                     const ExportOptions& options = {});

/// Element id used for a time node in emitted documents (objectId for leaves,
/// the container's object id otherwise).
std::string element_id_for(const intermediate::TimeNode& node);

} // namespace medex

#endif // MEDEX_SMIL_BACKEND_HPP
