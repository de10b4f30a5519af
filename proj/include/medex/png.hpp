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

#ifndef MEDEX_PNG_HPP
#define MEDEX_PNG_HPP

#include "medex/intermediate.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace medex {

/// Keyword of the PNG tEXt chunk carrying the rasterized text.
inline constexpr std::string_view kPngTextKey = "medex:text";

/// Turns a text payload into a PNG image of exactly width x height pixels.
/// Implementations must be deterministic.
class Rasterizer {
public:
    virtual ~Rasterizer() = default;
    virtual std::string raster(const intermediate::TextPayload& text, std::int64_t widthPx,
                               std::int64_t heightPx) const = 0;
};

/// Structural stand-in for a typographic rasterizer: white background, a
/// one-pixel border in the text color, and the text stored in a tEXt chunk
/// (no glyphs are drawn). 8-bit RGB, one IDAT.
/// Throws medex::Error("DegenerateBox") when either dimension is <= 0.
std::string default_rasterize(const intermediate::TextPayload& text, std::int64_t widthPx, std::int64_t heightPx);

class DefaultRasterizer final : public Rasterizer {
public:
    std::string raster(const intermediate::TextPayload& text, std::int64_t widthPx,
                       std::int64_t heightPx) const override
    {
        return default_rasterize(text, widthPx, heightPx);
    }
};

} // namespace medex

#endif // MEDEX_PNG_HPP
