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

#ifndef MEDEX_SMIL_IMPORTER_HPP
#define MEDEX_SMIL_IMPORTER_HPP

#include "medex/error.hpp"
#include "medex/intermediate.hpp"

#include <string_view>

namespace medex {

struct ImportResult {
    intermediate::IntermediateDocument doc;
    /// Warnings only (skipped prefetch, dropped foreign content, ...).
    ValidationReport report;
};

/// Imports the browser-renderable SMIL subset (SMIL 2.0, 2.1 and 3.0
/// Language namespaces): meta, root-layout, nested regions in pixels or
/// percent, par/seq/excl, img/audio/video/text/ref media, offset and
/// `ID.activateEvent` begins, clock-value and indefinite durations.
///
/// A region shared by N media objects becomes N sibling regions suffixed
/// `-1`..`-N`. `prefetch` is skipped with a SkippedPrefetch warning.
///
/// Throws UnsupportedFeature (animation, transitions, priorityClass, and
/// other SMIL features outside the subset), XmlSyntaxError or SchemaError.
ImportResult import_smil(std::string_view bytes);

} // namespace medex

#endif // MEDEX_SMIL_IMPORTER_HPP
