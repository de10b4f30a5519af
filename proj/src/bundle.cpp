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

#include "medex/bundle.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace medex {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kPlaceholderScheduler =
    "// medex scheduler placeholder.\n"
    "// Set MEDEX_SCHEDULER_PATH at export time to bundle the real runtime.\n"
    "(function () {\n"
    "  \"use strict\";\n"
    "  if (typeof console !== \"undefined\") {\n"
    "    console.warn(\"medex: scheduler runtime not bundled\");\n"
    "  }\n"
    "})();\n";

std::string read_file(const fs::path& path, std::string_view code)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(std::string(code), "cannot read '" + path.string() + "'", path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& bytes)
{
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.close();
    if (!out)
        throw Error("IoError", "cannot write '" + path.string() + "'", path.string());
}

fs::path strip_file_scheme(std::string_view uri)
{
    if (uri.starts_with("file://"))
        uri.remove_prefix(7);
    else if (uri.starts_with("file:"))
        uri.remove_prefix(5);
    return fs::path(std::string(uri));
}

bool is_index(const std::string& rel)
{
    return rel.starts_with("index.");
}

} // namespace

BundleOutput smil_bundle_output(const SmilBundle& bundle)
{
    BundleOutput out;
    for (const auto& entry : bundle.manifest) {
        if (entry.kind == ManifestEntry::Kind::generated_png)
            out.files.emplace_back(entry.path, entry.contents);
        else
            out.copies.push_back(entry);
    }
    out.files.emplace_back("index.smil", bundle.documentBytes);
    return out;
}

BundleOutput xhtml_bundle_output(const XhtmlBundle& bundle, std::string schedulerScript)
{
    BundleOutput out;
    for (const auto& entry : bundle.manifest) {
        if (entry.kind == ManifestEntry::Kind::generated_png)
            out.files.emplace_back(entry.path, entry.contents);
        else
            out.copies.push_back(entry);
    }
    out.files.emplace_back(bundle.stylesheetRef, bundle.cssBytes);
    out.files.emplace_back(bundle.schedulerRef, std::move(schedulerScript));
    out.files.emplace_back("index.html", bundle.htmlBytes);
    return out;
}

std::string scheduler_script()
{
    const char* override = std::getenv("MEDEX_SCHEDULER_PATH");
    if (override == nullptr || *override == '\0')
        return std::string(kPlaceholderScheduler);
    return read_file(override, "IoError");
}

fs::path media_base(const intermediate::IntermediateDocument& doc, const fs::path& inputPath)
{
    fs::path inputDir = inputPath.has_parent_path() ? inputPath.parent_path() : fs::path(".");
    const auto* base = doc.head.find("base");
    if (base == nullptr || base->empty() || is_remote_uri(*base))
        return inputDir;
    fs::path p = strip_file_scheme(*base);
    return p.is_absolute() ? p : inputDir / p;
}

void write_bundle(const fs::path& outDir, const BundleOutput& output, const fs::path& mediaBase)
{
    std::error_code ec;
    fs::create_directories(outDir, ec);
    if (ec)
        throw Error("IoError", "cannot create '" + outDir.string() + "': " + ec.message(), outDir.string());

    fs::path staging = outDir / (".medex-staging-" + std::to_string(::getpid()));
    fs::remove_all(staging, ec);
    try {
        std::vector<std::string> order;
        for (const auto& [rel, bytes] : output.files) {
            write_file(staging / rel, bytes);
            order.push_back(rel);
        }
        for (const auto& copy : output.copies) {
            fs::path src = strip_file_scheme(copy.sourceUri);
            if (src.is_relative())
                src = mediaBase / src;
            if (!fs::is_regular_file(src))
                throw Error("MissingAsset", "media file '" + src.string() + "' not found for object '"
                                                + copy.sourceObjectId + "'",
                            copy.sourceUri);
            fs::create_directories((staging / copy.path).parent_path());
            fs::copy_file(src, staging / copy.path, fs::copy_options::overwrite_existing);
            order.push_back(copy.path);
        }

        std::stable_partition(order.begin(), order.end(), [](const std::string& rel) { return !is_index(rel); });
        for (const auto& rel : order) {
            fs::create_directories((outDir / rel).parent_path());
            fs::rename(staging / rel, outDir / rel);
        }
        fs::remove_all(staging, ec);
    }
    catch (const Error&) {
        fs::remove_all(staging, ec);
        throw;
    }
    catch (const fs::filesystem_error& e) {
        fs::remove_all(staging, ec);
        throw Error("IoError", e.what(), outDir.string());
    }
}

} // namespace medex
