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

#ifndef MEDEX_TYPES_HPP
#define MEDEX_TYPES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

// Vocabulary shared by the source model and the intermediate format.

namespace medex {

enum class MediaType { image, audio, video, text };

std::string_view to_string(MediaType type);
std::optional<MediaType> media_type_from_string(std::string_view s);

/// Audio and video have an intrinsic duration; images and text do not.
inline bool is_continuous(MediaType type)
{
    return type == MediaType::audio || type == MediaType::video;
}

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    bool operator==(const Rgb&) const = default;
};

/// `#RRGGBB` (case-insensitive on input, upper-case on output).
std::optional<Rgb> parse_rgb(std::string_view s);
std::string format_rgb(Rgb c);

struct TextStyle {
    std::string fontFamilyName = "sans-serif";
    std::int64_t fontSizePx = 16;
    Rgb color;

    bool operator==(const TextStyle&) const = default;
};

enum class ContainerKind { par, seq, excl };

std::string_view to_string(ContainerKind kind);

/// Begin of a resolved time node, relative to its parent's start.
struct Begin {
    enum class Kind { static_offset, event, unresolved };

    Kind kind = Kind::unresolved;
    std::int64_t ms = 0;
    std::string clickTarget;

    static Begin at(std::int64_t ms) { return {Kind::static_offset, ms, {}}; }
    static Begin on_click(std::string target) { return {Kind::event, 0, std::move(target)}; }
    static Begin unresolved() { return {}; }

    bool is_static() const { return kind == Kind::static_offset; }
    bool operator==(const Begin&) const = default;
};

/// Duration of a resolved time node.
struct Duration {
    enum class Kind { static_ms, media, indefinite, unresolved };

    Kind kind = Kind::unresolved;
    std::int64_t ms = 0;

    static Duration of(std::int64_t ms) { return {Kind::static_ms, ms}; }
    static Duration media() { return {Kind::media, 0}; }
    static Duration indefinite() { return {Kind::indefinite, 0}; }
    static Duration unresolved() { return {}; }

    bool is_static() const { return kind == Kind::static_ms; }
    bool operator==(const Duration&) const = default;
};

} // namespace medex

#endif // MEDEX_TYPES_HPP
