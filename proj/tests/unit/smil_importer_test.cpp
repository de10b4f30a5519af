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

#include "medex/intermediate.hpp"
#include "medex/resolver.hpp"
#include "medex/smil_backend.hpp"
#include "medex/smil_importer.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>

namespace medex {
namespace {

std::string smil(const std::string& head, const std::string& body,
                 const std::string& ns = "http://www.w3.org/2005/SMIL21/Language")
{
    return "<smil xmlns=\"" + ns + "\"><head>" + head + "</head><body>" + body + "</body></smil>";
}

const std::string kLayout = R"(<meta name="title" content="imported"/>
    <layout><root-layout width="640" height="480"/>
      <region xml:id="main" left="10%" top="20" width="50%" height="240"/></layout>)";

std::string code_of(const std::string& bytes)
{
    try {
        import_smil(bytes);
    }
    catch (const Error& e) {
        return e.code();
    }
    return "";
}

TEST(SmilImport, SharedRegionIsDuplicated)
{
    auto result = import_smil(smil(kLayout, R"(<seq>
        <img xml:id="a" region="main" src="a.png" dur="2s"/>
        <img xml:id="b" region="main" src="b.png" dur="2s"/></seq>)"));
    const auto& doc = result.doc;
    ASSERT_EQ(doc.layout.size(), 2U);
    EXPECT_EQ(doc.layout[0].regionId, "main-1");
    EXPECT_EQ(doc.layout[1].regionId, "main-2");
    for (const auto& r : doc.layout) {
        EXPECT_EQ(r.relLeft, 64);
        EXPECT_EQ(r.relTop, 20);
        EXPECT_EQ(r.width, 320);
        EXPECT_EQ(r.height, 240);
    }
    ASSERT_EQ(doc.references.size(), 2U);
    EXPECT_NE(doc.references[0].regionId, doc.references[1].regionId);
    EXPECT_TRUE(intermediate::validate_intermediate(doc).ok());
}

TEST(SmilImport, PrefetchIsSkippedWithWarning)
{
    auto result = import_smil(smil(kLayout, R"(<seq><prefetch src="a.png"/>
        <img xml:id="a" region="main" src="a.png" dur="2s"/></seq>)"));
    bool warned = false;
    for (const auto& w : result.report.warnings)
        warned |= w.code == "SkippedPrefetch";
    EXPECT_TRUE(warned);
    EXPECT_EQ(result.doc.media.size(), 1U);
}

TEST(SmilImport, AnimationIsUnsupported)
{
    EXPECT_EQ(code_of(smil(kLayout, R"(<par><img xml:id="a" region="main" src="a.png">
        <animate attributeName="left" to="10"/></img></par>)")),
              "UnsupportedFeature");
    EXPECT_EQ(code_of(smil(kLayout, R"(<par><animate attributeName="left" to="10"/></par>)")), "UnsupportedFeature");
    EXPECT_EQ(code_of(smil(kLayout, R"(<excl><priorityClass/></excl>)")), "UnsupportedFeature");
    EXPECT_EQ(code_of(smil("<transition xml:id=\"t\" type=\"fade\"/>", "<par/>")), "UnsupportedFeature");
}

TEST(SmilImport, Errors)
{
    EXPECT_EQ(code_of("<smil"), "XmlSyntaxError");
    EXPECT_EQ(code_of("<html/>"), "SchemaError");
    EXPECT_EQ(code_of(smil(kLayout, "<par><blink/></par>")), "SchemaError");
    EXPECT_EQ(code_of(smil(kLayout, R"(<par><img xml:id="a" src="a.png" begin="b.end"/></par>)")),
              "UnsupportedFeature");
    EXPECT_EQ(code_of(smil(kLayout, R"(<par><img xml:id="a" src="a.png" begin="1s;2s"/></par>)")),
              "UnsupportedFeature");
}

TEST(SmilImport, ClockValuesAndEvents)
{
    auto result = import_smil(smil(kLayout, R"(<par xml:id="p">
        <img xml:id="btn" region="main" src="btn.png"/>
        <excl xml:id="x"><video xml:id="v" src="v.mp4" begin="btn.activateEvent"/></excl>
        <audio xml:id="au" src="a.mp3" begin="00:00:01.5" dur="2min"/></par>)"));
    const auto& t = result.doc.timing;
    EXPECT_EQ(t.timeId, "t-p");
    EXPECT_EQ(t.children.at(1).children.at(0).begin, Begin::on_click("btn"));
    EXPECT_EQ(t.children.at(1).children.at(0).dur, Duration::media());
    EXPECT_EQ(t.children.at(2).begin, Begin::at(1500));
    EXPECT_EQ(t.children.at(2).dur, Duration::of(120000));
}

TEST(SmilImport, TextAndDefaults)
{
    auto result = import_smil(smil("", R"(<text xml:id="t" src="data:,Hello%20there"/>)",
                                   "http://www.w3.org/ns/SMIL"));
    const auto& doc = result.doc;
    EXPECT_EQ(doc.canvasWidth, 640);
    EXPECT_EQ(*doc.head.find("title"), "Untitled");
    ASSERT_EQ(doc.media.size(), 1U);
    ASSERT_TRUE(doc.media[0].text);
    EXPECT_EQ(doc.media[0].text->content, "Hello there");
    EXPECT_EQ(doc.media[0].text->style, TextStyle{});
    EXPECT_EQ(doc.timing.kind, intermediate::TimeNode::Kind::seq); // body acts as a seq
    std::set<std::string> codes;
    for (const auto& w : result.report.warnings)
        codes.insert(w.code);
    EXPECT_TRUE(codes.count("DefaultRootLayout"));
    EXPECT_TRUE(codes.count("MissingTitle"));
}

TEST(SmilImport, NestedRegionsAndRightBottom)
{
    auto result = import_smil(smil(R"(<layout><root-layout width="400" height="300"/>
        <region xml:id="outer" left="100" top="50" width="200" height="200">
          <region xml:id="inner" right="10" bottom="20%" width="50%" height="40"/>
        </region></layout>)",
                                   R"(<img xml:id="i" region="inner" src="i.png"/>)"));
    const auto* inner = intermediate::find_region(result.doc, "inner");
    ASSERT_NE(inner, nullptr);
    EXPECT_EQ(inner->width, 100);
    EXPECT_EQ(inner->relLeft, 90);
    EXPECT_EQ(inner->relTop, 120);
    EXPECT_EQ(inner->absLeft, 190);
    EXPECT_EQ(inner->absTop, 170);
}

TEST(SmilImport, PivotRoundTripPreservesShapeAndGeometry)
{
    for (const auto& path : test::corpus_files()) {
        SCOPED_TRACE(path.filename().string());
        auto doc = compile(test::load_source(path));
        if (doc.media.empty())
            continue;
        auto back = import_smil(emit_smil(doc, DefaultRasterizer{}).documentBytes).doc;
        EXPECT_EQ(test::shape_of(back.timing), test::shape_of(doc.timing));
        for (const auto& ref : doc.references) {
            const auto* want = intermediate::find_region(doc, ref.regionId);
            const auto* backRef = intermediate::find_reference(back, ref.objectId);
            ASSERT_NE(backRef, nullptr) << ref.objectId;
            const auto* got = intermediate::find_region(back, backRef->regionId);
            ASSERT_NE(got, nullptr);
            EXPECT_EQ(got->width, want->width);
            EXPECT_EQ(got->height, want->height);
            EXPECT_EQ(got->absLeft, want->absLeft);
            EXPECT_EQ(got->absTop, want->absTop);
        }
        EXPECT_EQ(back.timing, doc.timing);
    }
}

} // namespace
} // namespace medex
