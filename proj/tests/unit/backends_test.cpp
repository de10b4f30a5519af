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

#include "medex/resolver.hpp"
#include "medex/smil_backend.hpp"
#include "medex/xhtml_backend.hpp"
#include "medex/xml.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

namespace medex {
namespace {

intermediate::IntermediateDocument compiled(const std::string& name)
{
    return compile(test::load_source(test::corpus_dir() / name));
}

class FailingRasterizer final : public Rasterizer {
public:
    std::string raster(const intermediate::TextPayload&, std::int64_t, std::int64_t) const override
    {
        throw std::runtime_error("font missing");
    }
};

TEST(SmilBackend, OneImageMatchesGolden)
{
    auto bundle = emit_smil(compiled("06-one-image.xml"), DefaultRasterizer{});
    EXPECT_EQ(bundle.documentBytes, test::read_file(test::golden_dir() / "one-image.smil"));
}

TEST(SmilBackend, TextBecomesGeneratedPng)
{
    auto doc = test::source_from(R"(<doc width="800" height="600" title="t"><object id="r" kind="par">
        <object id="cap" kind="media" type="text"><spatial left="0" top="0" width="400" height="300"/>Hello</object>
        </object></doc>)");
    auto bundle = emit_smil(compile(doc), DefaultRasterizer{});
    auto root = xml::parse(bundle.documentBytes);
    const auto* img = test::find_by_id(root, "cap");
    ASSERT_NE(img, nullptr);
    EXPECT_EQ(img->name, "img");
    EXPECT_EQ(*img->attr("src"), "assets/text-cap.png");
    ASSERT_EQ(bundle.manifest.size(), 1U);
    EXPECT_EQ(bundle.manifest[0].kind, ManifestEntry::Kind::generated_png);
    EXPECT_EQ(bundle.manifest[0].path, "assets/text-cap.png");
    EXPECT_EQ(bundle.manifest[0].sourceObjectId, "cap");
    auto info = test::decode_png(bundle.manifest[0].contents);
    EXPECT_EQ(info.width, 400U);
    EXPECT_EQ(info.height, 300U);
    EXPECT_EQ(info.textValue, "Hello");
}

TEST(SmilBackend, EmptyDocumentHasEmptyBody)
{
    auto bundle = emit_smil(compiled("07-empty.xml"), DefaultRasterizer{});
    auto root = xml::parse(bundle.documentBytes);
    const auto* body = test::find_child(root, "body");
    ASSERT_NE(body, nullptr);
    EXPECT_TRUE(body->element_children().empty());
    EXPECT_TRUE(bundle.manifest.empty());
    EXPECT_NE(test::find_child(*test::find_child(root, "head"), "layout"), nullptr);
}

TEST(SmilBackend, TimingAttributes)
{
    auto bundle = emit_smil(compiled("04-narrated.xml"), DefaultRasterizer{});
    auto root = xml::parse(bundle.documentBytes);
    const auto* voice = test::find_by_id(root, "voice");
    EXPECT_EQ(voice->name, "audio");
    EXPECT_EQ(voice->attr("dur"), nullptr); // intrinsic duration
    const auto* s2 = test::find_by_id(root, "s2");
    EXPECT_EQ(*s2->attr("begin"), "500ms"); // seq children carry their own offset
    EXPECT_EQ(*s2->attr("dur"), "3000ms");
    auto menu = emit_smil(compiled("03-excl-menu.xml"), DefaultRasterizer{});
    auto menuRoot = xml::parse(menu.documentBytes);
    const auto* chapA = test::find_by_id(menuRoot, "chapA");
    EXPECT_EQ(*chapA->attr("begin"), "btnA.activateEvent");
}

TEST(SmilBackend, StructuralPropertiesOverCorpus)
{
    for (const auto& path : test::corpus_files()) {
        SCOPED_TRACE(path.filename().string());
        auto doc = compile(test::load_source(path));
        auto bundle = emit_smil(doc, DefaultRasterizer{});
        auto root = xml::parse(bundle.documentBytes);
        EXPECT_EQ(root.ns, kSmil21Namespace);
        const auto* body = test::find_child(root, "body");
        ASSERT_NE(body, nullptr);
        if (doc.media.empty())
            continue;
        EXPECT_EQ(test::shape_of_markup(*body), test::shape_of(doc.timing));

        std::set<std::string> regions;
        std::vector<const xml::Node*> stack{test::find_child(*test::find_child(root, "head"), "layout")};
        while (!stack.empty()) {
            const auto* n = stack.back();
            stack.pop_back();
            if (n->name == "region")
                regions.insert(*n->attr(xml::kXmlNamespace, "id"));
            for (const auto* c : n->element_children())
                stack.push_back(c);
        }
        std::size_t mediaElements = 0;
        stack = {body};
        while (!stack.empty()) {
            const auto* n = stack.back();
            stack.pop_back();
            if (n->name == "text")
                ADD_FAILURE() << "text element in SMIL output";
            if (n->name == "img" || n->name == "audio" || n->name == "video") {
                ++mediaElements;
                EXPECT_EQ(regions.count(*n->attr("region")), 1U);
            }
            for (const auto* c : n->element_children())
                stack.push_back(c);
        }
        EXPECT_EQ(mediaElements, doc.media.size());
    }
}

TEST(SmilBackend, RasterizerFailureIsRasterizeError)
{
    try {
        emit_smil(compiled("01-slideshow.xml"), FailingRasterizer{});
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.code(), "RasterizeError");
    }
}

TEST(SmilBackend, TextInEmptyBoxIsRasterizeError)
{
    auto doc = test::source_from(R"(<doc width="100" height="100" title="t"><object id="r" kind="par">
        <object id="cap" kind="media" type="text"><spatial left="0" top="0" width="0%" height="10"/>x</object>
        </object></doc>)");
    try {
        emit_smil(compile(doc), DefaultRasterizer{});
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.code(), "RasterizeError");
    }
}

TEST(SmilBackend, InvalidInputIsInvariantViolation)
{
    auto doc = compiled("06-one-image.xml");
    doc.references.clear();
    try {
        emit_smil(doc, DefaultRasterizer{});
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.code(), "InvariantViolation");
    }
}

TEST(XhtmlBackend, OneImageMatchesGolden)
{
    auto bundle = emit_xhtml(compiled("06-one-image.xml"));
    EXPECT_EQ(bundle.htmlBytes, test::read_file(test::golden_dir() / "one-image.html"));
    EXPECT_EQ(bundle.cssBytes, test::read_file(test::golden_dir() / "one-image.css"));
}

TEST(XhtmlBackend, RegionRuleCarriesPixels)
{
    auto doc = test::source_from(R"(<doc width="800" height="600" title="t"><object id="r" kind="par">
        <object id="m" kind="media" type="image" src="m.png"><spatial left="200" top="60" width="400" height="300"/></object>
        </object></doc>)");
    auto css = emit_xhtml(compile(doc)).cssBytes;
    EXPECT_NE(css.find("#r-m {\n  position:absolute;\n  left:200px;\n  top:60px;\n  width:400px;\n  height:300px;\n"),
              std::string::npos)
        << css;
}

TEST(XhtmlBackend, TimesheetShape)
{
    auto doc = test::source_from(R"(<doc width="100" height="100" title="t"><object id="p" kind="par">
        <object id="s" kind="seq">
          <object id="a" kind="media" type="image" src="a.png"><timing dur="1s"/></object>
          <object id="b" kind="media" type="image" src="b.png"><timing dur="1s"/></object>
        </object></object></doc>)");
    auto bundle = emit_xhtml(compile(doc));
    auto root = xml::parse(bundle.htmlBytes);
    const auto* sheet = test::find_child(*test::find_child(root, "head"), "timesheet");
    ASSERT_NE(sheet, nullptr);
    EXPECT_EQ(sheet->ns, kTimesheetNamespace);
    EXPECT_EQ(test::shape_of_markup(*sheet), "par(seq(leaf,leaf))");
}

TEST(XhtmlBackend, ClickTriggersAndText)
{
    auto bundle = emit_xhtml(compiled("03-excl-menu.xml"));
    auto root = xml::parse(bundle.htmlBytes);
    const auto* sheet = test::find_child(*test::find_child(root, "head"), "timesheet");
    bool found = false;
    std::vector<const xml::Node*> stack{sheet};
    while (!stack.empty()) {
        const auto* n = stack.back();
        stack.pop_back();
        if (n->name == "item" && *n->attr("select") == "#chapA") {
            EXPECT_EQ(*n->attr("begin"), "click(btnA)");
            found = true;
        }
        for (const auto* c : n->element_children())
            stack.push_back(c);
    }
    EXPECT_TRUE(found);
    const auto* btn = test::find_by_id(root, "btnA");
    ASSERT_NE(btn, nullptr);
    EXPECT_EQ(btn->name, "div");
    EXPECT_EQ(btn->direct_text(), "Chapter A");
    EXPECT_NE(btn->attr("class")->find("medex-hidden"), std::string::npos);
    EXPECT_TRUE(bundle.manifest.empty() || bundle.manifest[0].kind == ManifestEntry::Kind::copied_media);
}

TEST(XhtmlBackend, ScriptAndStylesheetReferencedOnce)
{
    for (const auto& path : test::corpus_files()) {
        auto bundle = emit_xhtml(compile(test::load_source(path)));
        const auto& html = bundle.htmlBytes;
        EXPECT_EQ(html.find("<script"), html.rfind("<script")) << path;
        EXPECT_NE(html.find(R"(src="scheduler.js")"), std::string::npos) << path;
        EXPECT_NE(html.find(R"(href="styles.css")"), std::string::npos) << path;
        EXPECT_EQ(html.find("<link"), html.rfind("<link")) << path;
        EXPECT_NO_THROW(xml::parse(html)) << path;
    }
}

TEST(XhtmlBackend, ContinuousMediaPreload)
{
    auto root = xml::parse(emit_xhtml(compiled("05-video-then-credits.xml")).htmlBytes);
    const auto* clip = test::find_by_id(root, "clip");
    ASSERT_NE(clip, nullptr);
    EXPECT_EQ(clip->name, "video");
    EXPECT_NE(clip->attr("preload"), nullptr);
}

TEST(XhtmlBackend, IdClashIsInvariantViolation)
{
    auto doc = test::source_from(R"(<doc width="100" height="100" title="t"><object id="r" kind="par">
        <object id="medex-canvas" kind="media" type="image" src="a.png"/></object></doc>)");
    try {
        emit_xhtml(compile(doc));
        FAIL();
    }
    catch (const Error& e) {
        EXPECT_EQ(e.code(), "InvariantViolation");
    }
}

} // namespace
} // namespace medex
