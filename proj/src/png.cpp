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

#include "medex/png.hpp"

#include <zlib.h>

namespace medex {

namespace {

constexpr std::int64_t kMaxSide = 16384;

void put_u32(std::string& out, std::uint32_t v)
{
    out += static_cast<char>((v >> 24) & 0xFF);
    out += static_cast<char>((v >> 16) & 0xFF);
    out += static_cast<char>((v >> 8) & 0xFF);
    out += static_cast<char>(v & 0xFF);
}

void put_chunk(std::string& out, std::string_view type, std::string_view data)
{
    put_u32(out, static_cast<std::uint32_t>(data.size()));
    std::string body(type);
    body.append(data);
    out += body;
    auto crc = crc32(0L, reinterpret_cast<const Bytef*>(body.data()), static_cast<uInt>(body.size()));
    put_u32(out, static_cast<std::uint32_t>(crc));
}

} // namespace

std::string default_rasterize(const intermediate::TextPayload& text, std::int64_t widthPx, std::int64_t heightPx)
{
    if (widthPx <= 0 || heightPx <= 0)
        throw Error("DegenerateBox", "cannot rasterize into a " + std::to_string(widthPx) + "x"
                                         + std::to_string(heightPx) + " box");
    if (widthPx > kMaxSide || heightPx > kMaxSide)
        throw Error("RasterizeError", "box exceeds the " + std::to_string(kMaxSide) + " pixel limit");

    const auto w = static_cast<std::size_t>(widthPx);
    const auto h = static_cast<std::size_t>(heightPx);
    const std::size_t stride = 1 + 3 * w;
    std::string raw(stride * h, static_cast<char>(0xFF));
    const Rgb ink = text.style.color;
    for (std::size_t y = 0; y < h; ++y) {
        char* row = raw.data() + y * stride;
        row[0] = 0; // filter: none
        for (std::size_t x = 0; x < w; ++x) {
            if (y == 0 || y + 1 == h || x == 0 || x + 1 == w) {
                char* px = row + 1 + 3 * x;
                px[0] = static_cast<char>(ink.r);
                px[1] = static_cast<char>(ink.g);
                px[2] = static_cast<char>(ink.b);
            }
        }
    }

    uLongf compressedSize = compressBound(static_cast<uLong>(raw.size()));
    std::string compressed(compressedSize, '\0');
    if (compress2(reinterpret_cast<Bytef*>(compressed.data()), &compressedSize,
                  reinterpret_cast<const Bytef*>(raw.data()), static_cast<uLong>(raw.size()), 6)
        != Z_OK)
        throw Error("RasterizeError", "zlib compression failed");
    compressed.resize(compressedSize);

    std::string out("\x89PNG\r\n\x1a\n", 8);

    std::string ihdr;
    put_u32(ihdr, static_cast<std::uint32_t>(widthPx));
    put_u32(ihdr, static_cast<std::uint32_t>(heightPx));
    ihdr += static_cast<char>(8); // bit depth
    ihdr += static_cast<char>(2); // color type: RGB
    ihdr += static_cast<char>(0); // compression
    ihdr += static_cast<char>(0); // filter
    ihdr += static_cast<char>(0); // interlace
    put_chunk(out, "IHDR", ihdr);

    std::string textChunk(kPngTextKey);
    textChunk += '\0';
    textChunk += text.content;
    put_chunk(out, "tEXt", textChunk);

    put_chunk(out, "IDAT", compressed);
    put_chunk(out, "IEND", {});
    return out;
}

} // namespace medex
