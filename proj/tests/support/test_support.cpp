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

#include "test_support.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <zlib.h>

namespace medex::test {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& bytes)
{
    if (path.has_parent_path())
        fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << bytes;
}

fs::path corpus_dir()
{
    return MEDEX_CORPUS_DIR;
}

fs::path golden_dir()
{
    return MEDEX_GOLDEN_DIR;
}

std::vector<fs::path> corpus_files()
{
    std::vector<fs::path> out;
    for (const auto& entry : fs::directory_iterator(corpus_dir())) {
        if (entry.path().extension() == ".xml")
            out.push_back(entry.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

source::SourceDocument load_source(const fs::path& path)
{
    return source::parse_source(read_file(path));
}

source::SourceDocument source_from(const std::string& xml)
{
    return source::parse_source(xml);
}

TempDir::TempDir()
{
    std::random_device rd;
    std::mt19937_64 rng(rd());
    path_ = fs::temp_directory_path() / ("medex-test-" + std::to_string(rng()));
    fs::create_directories(path_);
}

TempDir::~TempDir()
{
    std::error_code ec;
    fs::remove_all(path_, ec);
}

std::string shape_of(const intermediate::TimeNode& node)
{
    if (node.kind == intermediate::TimeNode::Kind::leaf)
        return "leaf";
    std::string out(intermediate::to_string(node.kind));
    out += '(';
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i != 0)
            out += ',';
        out += shape_of(node.children[i]);
    }
    return out + ')';
}

namespace {

bool is_container_name(const std::string& name)
{
    return name == "par" || name == "seq" || name == "excl";
}

std::string markup_node_shape(const xml::Node& n)
{
    if (!is_container_name(n.name))
        return "leaf";
    std::string out = n.name + "(";
    bool first = true;
    for (const auto* c : n.element_children()) {
        if (!first)
            out += ',';
        first = false;
        out += markup_node_shape(*c);
    }
    return out + ")";
}

std::uint32_t be32(const std::string& s, std::size_t at)
{
    return (std::uint32_t(std::uint8_t(s[at])) << 24) | (std::uint32_t(std::uint8_t(s[at + 1])) << 16)
           | (std::uint32_t(std::uint8_t(s[at + 2])) << 8) | std::uint32_t(std::uint8_t(s[at + 3]));
}

} // namespace

std::string shape_of_markup(const xml::Node& container)
{
    auto kids = container.element_children();
    if (kids.size() != 1)
        return "<" + std::to_string(kids.size()) + " roots>";
    return markup_node_shape(*kids.front());
}

const xml::Node* find_child(const xml::Node& parent, std::string_view name)
{
    for (const auto* c : parent.element_children()) {
        if (c->name == name)
            return c;
    }
    return nullptr;
}

const xml::Node* find_by_id(const xml::Node& root, std::string_view id)
{
    const std::string* own = root.attr(xml::kXmlNamespace, "id");
    if (own == nullptr)
        own = root.attr("id");
    if (own != nullptr && *own == id)
        return &root;
    for (const auto* c : root.element_children()) {
        if (const auto* hit = find_by_id(*c, id))
            return hit;
    }
    return nullptr;
}

PngInfo decode_png(const std::string& bytes)
{
    static const std::string signature = "\x89PNG\r\n\x1a\n";
    if (bytes.compare(0, signature.size(), signature) != 0)
        throw std::runtime_error("bad PNG signature");
    PngInfo info;
    std::string idat;
    std::size_t at = signature.size();
    while (at + 12 <= bytes.size()) {
        std::uint32_t len = be32(bytes, at);
        std::string type = bytes.substr(at + 4, 4);
        std::string data = bytes.substr(at + 8, len);
        std::uint32_t crc = be32(bytes, at + 8 + len);
        uLong expect = crc32(0, reinterpret_cast<const Bytef*>(bytes.data() + at + 4), len + 4);
        if (crc != expect)
            info.crcOk = false;
        info.chunkTypes.push_back(type);
        if (type == "IHDR") {
            info.width = be32(data, 0);
            info.height = be32(data, 4);
            info.bitDepth = std::uint8_t(data[8]);
            info.colorType = std::uint8_t(data[9]);
        }
        else if (type == "tEXt") {
            auto nul = data.find('\0');
            info.textKey = data.substr(0, nul);
            info.textValue = data.substr(nul + 1);
        }
        else if (type == "IDAT") {
            idat += data;
        }
        at += 12 + len;
    }

    std::size_t stride = std::size_t(info.width) * 3 + 1;
    std::vector<std::uint8_t> raw(stride * info.height);
    uLongf rawLen = raw.size();
    if (uncompress(raw.data(), &rawLen, reinterpret_cast<const Bytef*>(idat.data()), idat.size()) != Z_OK
        || rawLen != raw.size())
        throw std::runtime_error("bad IDAT");
    for (std::uint32_t y = 0; y < info.height; ++y) {
        if (raw[y * stride] != 0)
            throw std::runtime_error("unexpected filter type");
        info.pixels.insert(info.pixels.end(), raw.begin() + y * stride + 1, raw.begin() + (y + 1) * stride);
    }
    return info;
}

} // namespace medex::test
