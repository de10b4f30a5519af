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

#ifndef MEDEX_SOURCE_HPP
#define MEDEX_SOURCE_HPP

#include "medex/error.hpp"
#include "medex/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

// Authoring-level source documents: nested objects carrying relative
// spatial specs and a par/seq/excl timing hierarchy.

namespace medex::source {

inline constexpr std::string_view kNamespace = "urn:medex:source:1";

enum class ObjectKind { par, seq, excl, media };

std::string_view to_string(ObjectKind kind);

/// Pixel count, percentage of the parent box, or `center` (left/top only).
/// Percentages are stored in thousandths of a percent so that resolution
/// stays in integer arithmetic.
struct Length {
    enum class Unit { pixels, percent, center };

    Unit unit = Unit::pixels;
    std::int64_t value = 0;

    static Length px(std::int64_t v) { return {Unit::pixels, v}; }
    static Length percent(std::int64_t whole) { return {Unit::percent, whole * 1000}; }
    static Length milli_percent(std::int64_t v) { return {Unit::percent, v}; }
    static Length center() { return {Unit::center, 0}; }

    bool operator==(const Length&) const = default;
};

std::optional<Length> parse_length(std::string_view s);
std::string format_length(const Length& length);

struct SpatialSpec {
    Length left = Length::px(0);
    Length top = Length::px(0);
    Length width = Length::percent(100);
    Length height = Length::percent(100);
    std::int64_t z = 0;

    bool operator==(const SpatialSpec&) const = default;
};

struct ClickTrigger {
    std::string targetId;

    bool operator==(const ClickTrigger&) const = default;
};

/// Offset in milliseconds, or a click on another object.
using BeginValue = std::variant<std::int64_t, ClickTrigger>;

struct DurValue {
    enum class Kind { fixed, media, indefinite, unspecified };

    Kind kind = Kind::unspecified;
    std::int64_t ms = 0;

    static DurValue fixed(std::int64_t ms) { return {Kind::fixed, ms}; }
    static DurValue media() { return {Kind::media, 0}; }
    static DurValue indefinite() { return {Kind::indefinite, 0}; }
    static DurValue unspecified() { return {}; }

    bool operator==(const DurValue&) const = default;
};

struct TimingSpec {
    BeginValue begin = std::int64_t{0};
    DurValue dur;

    bool operator==(const TimingSpec&) const = default;
};

struct MediaRef {
    MediaType type = MediaType::image;
    std::optional<std::string> src;
    std::optional<std::string> textContent;
    std::optional<TextStyle> textStyle;

    bool operator==(const MediaRef&) const = default;
};

struct ObjectNode {
    std::string id;
    ObjectKind kind = ObjectKind::par;
    std::optional<SpatialSpec> spatial;
    TimingSpec timing;
    std::vector<ObjectNode> children;
    std::optional<MediaRef> media;

    bool is_container() const { return kind != ObjectKind::media; }
    bool operator==(const ObjectNode&) const = default;
};

struct SourceDocument {
    std::int64_t canvasWidth = 0;
    std::int64_t canvasHeight = 0;
    std::string title;
    std::string baseUri;
    ObjectNode root;

    bool operator==(const SourceDocument&) const = default;
};

/// Parses the source XML format. Elements may be in the source namespace or
/// in no namespace. Throws medex::Error with code XmlSyntaxError,
/// SchemaError or DuplicateId.
SourceDocument parse_source(std::string_view bytes);

/// Lists every structural violation; never throws.
ValidationReport validate_source(const SourceDocument& doc);

} // namespace medex::source

#endif // MEDEX_SOURCE_HPP
