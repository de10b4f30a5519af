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

#ifndef MEDEX_ASSETS_HPP
#define MEDEX_ASSETS_HPP

#include "medex/intermediate.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace medex {

struct ManifestEntry {
    enum class Kind { generated_png, copied_media };

    std::string path; // relative to the bundle root
    Kind kind = Kind::copied_media;
    std::string sourceObjectId;
    std::string sourceUri;   // copied media only
    std::string contents;    // generated files only

    bool operator==(const ManifestEntry&) const = default;
};

std::string_view to_string(ManifestEntry::Kind kind);

struct ExportOptions {
    /// Rewrite local media sources to `assets/<basename>` and list them for
    /// copying. When false, sources are emitted unchanged.
    bool bundleMedia = true;
};

/// Where each asset lives inside an export bundle.
struct AssetPlan {
    std::map<std::string, std::string> pathByObject;
    /// One copy job per distinct local source, in document order.
    std::vector<ManifestEntry> copies;
};

/// `scheme:` prefix of two or more characters (so `C:` drive letters are not
/// taken for schemes).
bool is_remote_uri(std::string_view uri);

/// Last path segment without query or fragment; "media" when empty.
std::string uri_basename(std::string_view uri);

/// Deterministic path allocation. Text assets rasterized for SMIL take
/// `assets/text-<objectId>.png`; local media take `assets/<basename>` with
/// `-2`, `-3`, ... suffixes on collisions between distinct sources.
/// Remote URIs are kept as-is.
AssetPlan plan_assets(const intermediate::IntermediateDocument& doc, bool rasterizeText,
                      const ExportOptions& options);

} // namespace medex

#endif // MEDEX_ASSETS_HPP
