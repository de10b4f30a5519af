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

#ifndef MEDEX_TEST_SUPPORT_HPP
#define MEDEX_TEST_SUPPORT_HPP

#include "medex/intermediate.hpp"
#include "medex/source.hpp"
#include "medex/xml.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace medex::test {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

std::filesystem::path corpus_dir();
std::filesystem::path golden_dir();

/// Every `*.xml` in the corpus, sorted by name.
std::vector<std::filesystem::path> corpus_files();

source::SourceDocument load_source(const std::filesystem::path& path);
source::SourceDocument source_from(const std::string& xml);

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

/// Container nesting rendered as e.g. `seq(par(leaf,leaf),leaf)`.
std::string shape_of(const intermediate::TimeNode& node);

/// Same rendering for a SMIL body or timesheet element: par/seq/excl are
/// containers, every other element is a leaf.
std::string shape_of_markup(const xml::Node& container);

const xml::Node* find_child(const xml::Node& parent, std::string_view name);
const xml::Node* find_by_id(const xml::Node& root, std::string_view id);

/// Decoded PNG structure for assertions.
struct PngInfo {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    int bitDepth = 0;
    int colorType = 0;
    std::vector<std::string> chunkTypes;
    std::string textKey;
    std::string textValue;
    bool crcOk = true;
    /// RGB triples, row-major, filter bytes removed.
    std::vector<std::uint8_t> pixels;
};

PngInfo decode_png(const std::string& bytes);

} // namespace medex::test

#endif // MEDEX_TEST_SUPPORT_HPP
