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

#ifndef MEDEX_INTERMEDIATE_HPP
#define MEDEX_INTERMEDIATE_HPP

#include "medex/error.hpp"
#include "medex/types.hpp"
#include "medex/xml.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// The intermediate (pivot) format: a fully resolved projection of a document
// on five sections: head, layout, timing, references and media.

namespace medex::intermediate {

inline constexpr std::string_view kNamespace = "http://ns.inria.fr/limsee3/intermediate";
inline constexpr std::string_view kVersion = "1.0";

/// A layout coordinate. Compiled documents only ever hold pixel counts; a
/// symbolic literal (e.g. "50%") can only come from reading a foreign or
/// hand-edited file and is rejected by validation.
struct PixelValue {
    std::int64_t px = 0;
    std::string unresolved;

    PixelValue() = default;
    PixelValue(std::int64_t v) : px(v) {} // NOLINT(google-explicit-constructor)

    static PixelValue symbolic(std::string literal)
    {
        PixelValue v;
        v.unresolved = std::move(literal);
        return v;
    }

    bool resolved() const { return unresolved.empty(); }
    std::string to_string() const { return resolved() ? std::to_string(px) : unresolved; }
    bool operator==(const PixelValue&) const = default;
};

struct RegionNode {
    std::string regionId;
    PixelValue relLeft;
    PixelValue relTop;
    PixelValue width;
    PixelValue height;
    PixelValue absLeft;
    PixelValue absTop;
    std::int64_t z = 0;
    std::vector<RegionNode> children;

    bool operator==(const RegionNode&) const = default;
};

struct TimeNode {
    enum class Kind { par, seq, excl, leaf };

    std::string timeId;
    Kind kind = Kind::par;
    std::string objectId; // leaf only
    Begin begin;
    Duration dur;
    /// Authored delay after the previous sibling's end; only meaningful for
    /// children of a seq, zero elsewhere. Keeps the delay recoverable when
    /// `begin` is unresolved.
    std::int64_t offset = 0;
    std::vector<TimeNode> children;

    bool is_leaf() const { return kind == Kind::leaf; }
    bool operator==(const TimeNode&) const = default;
};

std::string_view to_string(TimeNode::Kind kind);

struct Reference {
    std::string objectId;
    std::string regionId;
    std::string timeId;

    bool operator==(const Reference&) const = default;
};

struct TextPayload {
    std::string content;
    TextStyle style;

    bool operator==(const TextPayload&) const = default;
};

struct Asset {
    std::string objectId;
    MediaType type = MediaType::image;
    std::optional<std::string> src;
    std::optional<TextPayload> text;

    bool operator==(const Asset&) const = default;
};

struct MetaEntry {
    std::string name;
    std::string content;

    bool operator==(const MetaEntry&) const = default;
};

struct Head {
    std::vector<MetaEntry> meta;
    /// Foreign-namespace elements, preserved and re-emitted after the meta
    /// entries.
    std::vector<xml::Node> foreign;

    const std::string* find(std::string_view name) const;
    void set(const std::string& name, std::string content);

    bool operator==(const Head&) const = default;
};

struct IntermediateDocument {
    Head head;
    std::int64_t canvasWidth = 0;
    std::int64_t canvasHeight = 0;
    /// Top-level regions; compiled documents have exactly one.
    std::vector<RegionNode> layout;
    TimeNode timing;
    std::vector<Reference> references;
    std::vector<Asset> media;

    bool operator==(const IntermediateDocument&) const = default;
};

const RegionNode* find_region(const IntermediateDocument& doc, std::string_view regionId);
const TimeNode* find_time_node(const IntermediateDocument& doc, std::string_view timeId);
const Asset* find_asset(const IntermediateDocument& doc, std::string_view objectId);
const Reference* find_reference(const IntermediateDocument& doc, std::string_view objectId);

/// Canonical bytes. Re-validates first and throws
/// medex::Error("InvariantViolation") on any validation error.
std::string serialize_intermediate(const IntermediateDocument& doc);

/// Canonical bytes without the validation gate; used for diagnostics and
/// for writing deliberately broken documents in tests.
std::string serialize_unchecked(const IntermediateDocument& doc);

struct ReadResult {
    IntermediateDocument doc;
    /// Warnings for dropped foreign content; no errors.
    ValidationReport report;
};

/// Structural read without invariant checking. Throws XmlSyntaxError or
/// SchemaError (unknown element/attribute in the intermediate namespace,
/// malformed values, misplaced sections).
ReadResult read_intermediate(std::string_view bytes);

/// Strict parse: read_intermediate followed by validate_intermediate.
/// Referential failures throw CrossRefViolation, anything else SchemaError.
IntermediateDocument parse_intermediate(std::string_view bytes);

/// Checks every structural invariant plus pixel closure. Never throws.
ValidationReport validate_intermediate(const IntermediateDocument& doc);

} // namespace medex::intermediate

#endif // MEDEX_INTERMEDIATE_HPP
