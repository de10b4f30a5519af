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

#ifndef MEDEX_BUNDLE_HPP
#define MEDEX_BUNDLE_HPP

#include "medex/assets.hpp"
#include "medex/intermediate.hpp"
#include "medex/smil_backend.hpp"
#include "medex/xhtml_backend.hpp"

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace medex {

/// Everything that ends up in an output directory: generated files by
/// relative path, plus media to copy from disk.
struct BundleOutput {
    std::vector<std::pair<std::string, std::string>> files;
    std::vector<ManifestEntry> copies;
};

BundleOutput smil_bundle_output(const SmilBundle& bundle);
BundleOutput xhtml_bundle_output(const XhtmlBundle& bundle, std::string schedulerScript);

/// Contents of MEDEX_SCHEDULER_PATH when set, otherwise a placeholder
/// script. Throws IoError when the override cannot be read.
std::string scheduler_script();

/// Directory that relative media sources are resolved against: the `base`
/// head entry when present, else the directory holding the input file.
std::filesystem::path media_base(const intermediate::IntermediateDocument& doc,
                                 const std::filesystem::path& inputPath);

/// Stages the bundle in a hidden directory under outDir and moves files into
/// place only once everything has been written, index.* last. On failure
/// nothing new is left behind. Throws MissingAsset or IoError.
void write_bundle(const std::filesystem::path& outDir, const BundleOutput& output,
                  const std::filesystem::path& mediaBase);

} // namespace medex

#endif // MEDEX_BUNDLE_HPP
