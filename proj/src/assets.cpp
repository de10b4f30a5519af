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

#include "medex/assets.hpp"

#include <cctype>
#include <set>

namespace medex {

std::string_view to_string(ManifestEntry::Kind kind)
{
    return kind == ManifestEntry::Kind::generated_png ? "generated-png" : "copied-media";
}

bool is_remote_uri(std::string_view uri)
{
    auto colon = uri.find(':');
    if (colon == std::string_view::npos || colon < 2)
        return false;
    if (!std::isalpha(static_cast<unsigned char>(uri[0])))
        return false;
    for (std::size_t i = 1; i < colon; ++i) {
        char c = uri[i];
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            return false;
    }
    // file: URIs point at local files and are bundled like relative paths.
    return uri.substr(0, colon) != "file";
}

std::string uri_basename(std::string_view uri)
{
    auto cut = uri.find_first_of("?#");
    if (cut != std::string_view::npos)
        uri = uri.substr(0, cut);
    auto slash = uri.find_last_of("/\\");
    if (slash != std::string_view::npos)
        uri = uri.substr(slash + 1);
    if (uri.empty() || uri == "." || uri == "..")
        return "media";
    return std::string(uri);
}

AssetPlan plan_assets(const intermediate::IntermediateDocument& doc, bool rasterizeText,
                      const ExportOptions& options)
{
    AssetPlan plan;
    std::set<std::string> taken;

    if (rasterizeText) {
        for (const auto& a : doc.media) {
            if (a.type != MediaType::text)
                continue;
            std::string path = "assets/text-" + a.objectId + ".png";
            taken.insert(path);
            plan.pathByObject[a.objectId] = path;
        }
    }

    std::map<std::string, std::string> pathBySource;
    for (const auto& a : doc.media) {
        if (a.type == MediaType::text || !a.src)
            continue;
        const std::string& src = *a.src;
        if (!options.bundleMedia || is_remote_uri(src)) {
            plan.pathByObject[a.objectId] = src;
            continue;
        }
        auto known = pathBySource.find(src);
        std::string path;
        if (known != pathBySource.end()) {
            path = known->second;
        }
        else {
            std::string name = uri_basename(src);
            auto dot = name.find_last_of('.');
            std::string stem = dot == std::string::npos || dot == 0 ? name : name.substr(0, dot);
            std::string ext = dot == std::string::npos || dot == 0 ? "" : name.substr(dot);
            path = "assets/" + name;
            for (int n = 2; taken.count(path) != 0; ++n)
                path = "assets/" + stem + "-" + std::to_string(n) + ext;
            taken.insert(path);
            pathBySource.emplace(src, path);
            plan.copies.push_back({path, ManifestEntry::Kind::copied_media, a.objectId, src, {}});
        }
        plan.pathByObject[a.objectId] = path;
    }
    return plan;
}

} // namespace medex
