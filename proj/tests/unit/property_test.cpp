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

// Seeded random documents checked against the same properties as the corpus.

#include "medex/activation.hpp"
#include "medex/intermediate.hpp"
#include "medex/resolver.hpp"
#include "medex/smil_backend.hpp"
#include "medex/smil_importer.hpp"
#include "medex/timeline_oracle.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

namespace medex {
namespace {

class Generator {
public:
    explicit Generator(std::uint32_t seed) : rng_(seed) {}

    std::string document(bool allowMedia)
    {
        allowMedia_ = allowMedia;
        next_ = 0;
        std::ostringstream ss;
        ss << "<doc width=\"" << pick(100, 1920) << "\" height=\"" << pick(100, 1080) << "\" title=\"random\">";
        container(ss, 0, "seq");
        ss << "</doc>";
        return ss.str();
    }

private:
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    std::string length(bool allowCenter)
    {
        switch (pick(0, allowCenter ? 2 : 1)) {
        case 0:
            return std::to_string(pick(0, 400));
        case 1: {
            int whole = pick(0, 100);
            bool fraction = whole < 100 && pick(0, 1) == 1;
            return std::to_string(whole) + (fraction ? "." + std::to_string(pick(0, 999)) : "") + "%";
        }
        default:
            return "center";
        }
    }

    void spatial(std::ostringstream& ss)
    {
        if (pick(0, 3) == 0)
            return;
        std::string w = length(false);
        std::string h = length(false);
        ss << "<spatial left=\"" << length(true) << "\" top=\"" << length(true) << "\" width=\"" << w
           << "\" height=\"" << h << "\" z=\"" << pick(-3, 3) << "\"/>";
    }

    void timing(std::ostringstream& ss, bool leaf, bool continuous)
    {
        std::string begin = pick(0, 2) == 0 ? std::to_string(pick(0, 40) * 25) + "ms" : "";
        std::string dur;
        switch (pick(0, 4)) {
        case 0:
            break;
        case 1:
            dur = "indefinite";
            break;
        case 2:
            if (leaf && continuous) {
                dur = "media";
                break;
            }
            [[fallthrough]];
        default:
            dur = std::to_string(pick(1, 60) * 50) + "ms";
        }
        if (begin.empty() && dur.empty())
            return;
        ss << "<timing" << (begin.empty() ? "" : " begin=\"" + begin + "\"") << (dur.empty() ? "" : " dur=\"" + dur + "\"")
           << "/>";
    }

    void media(std::ostringstream& ss)
    {
        std::string id = "m" + std::to_string(next_++);
        int t = pick(0, allowMedia_ ? 3 : 1);
        const char* type = t == 0 ? "image" : t == 1 ? "text" : t == 2 ? "audio" : "video";
        ss << "<object id=\"" << id << "\" kind=\"media\" type=\"" << type << "\"";
        if (t != 1)
            ss << " src=\"media/" << id << ".bin\"";
        ss << ">";
        spatial(ss);
        timing(ss, true, t >= 2);
        if (t == 1)
            ss << "text " << id;
        ss << "</object>";
    }

    void container(std::ostringstream& ss, int level, const char* kind)
    {
        std::string id = "c" + std::to_string(next_++);
        ss << "<object id=\"" << id << "\" kind=\"" << kind << "\">";
        if (level > 0) {
            spatial(ss);
            timing(ss, false, false);
        }
        int children = pick(level == 0 ? 1 : 0, 4);
        for (int i = 0; i < children; ++i) {
            if (level < 3 && pick(0, 2) == 0) {
                int k = pick(0, 2);
                container(ss, level + 1, k == 0 ? "par" : k == 1 ? "seq" : "excl");
            }
            else {
                media(ss);
            }
        }
        ss << "</object>";
    }

    std::mt19937 rng_;
    bool allowMedia_ = false;
    int next_ = 0;
};

/// import_smil(emit_smil(doc)), or nothing when the document has no media
/// or a text object sits in a zero-sized box and cannot be rasterized.
std::optional<intermediate::IntermediateDocument> pivot(const intermediate::IntermediateDocument& doc)
{
    if (doc.media.empty())
        return std::nullopt;
    try {
        return import_smil(emit_smil(doc, DefaultRasterizer{}).documentBytes).doc;
    }
    catch (const Error& e) {
        EXPECT_EQ(e.code(), "RasterizeError");
        return std::nullopt;
    }
}

TEST(Property, RandomStaticDocuments)
{
    Generator gen(20261015);
    int statics = 0;
    for (int i = 0; i < 150; ++i) {
        auto bytes = gen.document(false);
        SCOPED_TRACE(bytes);
        auto src = source::parse_source(bytes);
        auto report = source::validate_source(src);
        ASSERT_TRUE(report.ok()) << report.errors[0].code << " " << report.errors[0].path;
        auto doc = compile(src);

        auto serialized = intermediate::serialize_intermediate(doc);
        EXPECT_EQ(serialized.find('%'), std::string::npos);
        auto parsed = intermediate::parse_intermediate(serialized);
        EXPECT_EQ(parsed, doc);
        EXPECT_EQ(intermediate::serialize_intermediate(parsed), serialized);

        // An indefinite child in a seq leaves later siblings unresolved.
        if (auto derived = derive_activation(doc.timing)) {
            EXPECT_EQ(to_string(timeline_oracle(src, {})), to_string(*derived));
            ++statics;
        }

        if (auto back = pivot(doc)) {
            EXPECT_EQ(back->timing, doc.timing);
        }
    }
    EXPECT_GE(statics, 50);
}

TEST(Property, RandomDocumentsWithIntrinsicDurations)
{
    Generator gen(7);
    for (int i = 0; i < 80; ++i) {
        auto bytes = gen.document(true);
        SCOPED_TRACE(bytes);
        auto src = source::parse_source(bytes);
        auto report = source::validate_source(src);
        ASSERT_TRUE(report.ok()) << report.errors[0].code << " " << report.errors[0].path;
        auto doc = compile(src);
        EXPECT_TRUE(intermediate::validate_intermediate(doc).ok());
        auto serialized = intermediate::serialize_intermediate(doc);
        EXPECT_EQ(intermediate::parse_intermediate(serialized), doc);
        if (auto back = pivot(doc)) {
            EXPECT_EQ(back->timing, doc.timing);
        }
    }
}

} // namespace
} // namespace medex
