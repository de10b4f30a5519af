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

#include "medex/types.hpp"

#include <cctype>

namespace medex {

std::string_view to_string(MediaType type)
{
    switch (type) {
    case MediaType::image: return "image";
    case MediaType::audio: return "audio";
    case MediaType::video: return "video";
    case MediaType::text: return "text";
    }
    return "image";
}

std::optional<MediaType> media_type_from_string(std::string_view s)
{
    if (s == "image")
        return MediaType::image;
    if (s == "audio")
        return MediaType::audio;
    if (s == "video")
        return MediaType::video;
    if (s == "text")
        return MediaType::text;
    return std::nullopt;
}

std::string_view to_string(ContainerKind kind)
{
    switch (kind) {
    case ContainerKind::par: return "par";
    case ContainerKind::seq: return "seq";
    case ContainerKind::excl: return "excl";
    }
    return "par";
}

std::optional<Rgb> parse_rgb(std::string_view s)
{
    if (s.size() != 7 || s[0] != '#')
        return std::nullopt;
    auto hex = [](char c) -> int {
        if (c >= '0' && c <= '9')
            return c - '0';
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (c >= 'a' && c <= 'f')
            return c - 'a' + 10;
        return -1;
    };
    std::uint8_t bytes[3];
    for (int i = 0; i < 3; ++i) {
        int hi = hex(s[1 + 2 * i]);
        int lo = hex(s[2 + 2 * i]);
        if (hi < 0 || lo < 0)
            return std::nullopt;
        bytes[i] = static_cast<std::uint8_t>(hi * 16 + lo);
    }
    return Rgb{bytes[0], bytes[1], bytes[2]};
}

std::string format_rgb(Rgb c)
{
    static constexpr char digits[] = "0123456789ABCDEF";
    std::string out = "#";
    for (std::uint8_t v : {c.r, c.g, c.b}) {
        out += digits[v >> 4];
        out += digits[v & 0xF];
    }
    return out;
}

} // namespace medex
