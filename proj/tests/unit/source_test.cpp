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

#include "medex/source.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

namespace medex {
namespace {

using source::DurValue;
using source::Length;

std::string wrap(const std::string& body)
{
    return R"(<doc xmlns="urn:medex:source:1" width="800" height="600" title="t">)" + body + "</doc>";
}

bool has_error(const std::string& body, const std::string& code)
{
    return source::validate_source(source::parse_source(wrap(body))).has_error(code);
}

std::string parse_error_code(const std::string& bytes)
{
    try {
        source::parse_source(bytes);
    }
    catch (const Error& e) {
        return e.code();
    }
    return "";
}

TEST(SourceParse, MinimalDocument)
{
    auto doc = source::parse_source(R"(<doc width="800" height="600"><object id="r" kind="par"/></doc>)");
    EXPECT_EQ(doc.canvasWidth, 800);
    EXPECT_EQ(doc.canvasHeight, 600);
    EXPECT_EQ(doc.root.id, "r");
    EXPECT_EQ(doc.root.kind, source::ObjectKind::par);
    EXPECT_TRUE(doc.root.children.empty());
    EXPECT_TRUE(source::validate_source(doc).ok());
}

TEST(SourceParse, DuplicateIdIsRejected)
{
    EXPECT_EQ(parse_error_code(wrap(R"(<object id="r" kind="par">
        <object id="a" kind="media" type="image" src="x.png"/>
        <object id="a" kind="media" type="image" src="y.png"/></object>)")),
              "DuplicateId");
}

TEST(SourceParse, DurationUnitsConvertToMilliseconds)
{
    auto doc = source::parse_source(wrap(R"(<object id="r" kind="par">
        <object id="m" kind="media" type="image" src="x.png"><timing dur="5s"/></object></object>)"));
    EXPECT_EQ(doc.root.children.at(0).timing.dur, DurValue::fixed(5000));
}

TEST(SourceParse, DefaultsApplied)
{
    auto doc = source::parse_source(wrap(R"(<object id="r" kind="par">
        <object id="m" kind="media" type="text"><spatial left="center" top="10" width="50%" height="20"/>  hi  </object>
        </object>)"));
    const auto& m = doc.root.children.at(0);
    EXPECT_EQ(m.timing.begin, source::BeginValue{std::int64_t{0}});
    EXPECT_EQ(m.timing.dur.kind, DurValue::Kind::unspecified);
    ASSERT_TRUE(m.spatial);
    EXPECT_EQ(m.spatial->z, 0);
    EXPECT_EQ(m.spatial->left, Length::center());
    EXPECT_EQ(m.spatial->width, Length::percent(50));
    ASSERT_TRUE(m.media);
    EXPECT_EQ(m.media->textContent, "hi");
    ASSERT_TRUE(m.media->textStyle);
    EXPECT_EQ(m.media->textStyle->fontFamilyName, "sans-serif");
    EXPECT_EQ(m.media->textStyle->fontSizePx, 16);
}

TEST(SourceParse, ClickBegin)
{
    auto doc = source::parse_source(wrap(R"~(<object id="r" kind="excl">
        <object id="m" kind="media" type="image" src="x.png"><timing begin="click(b)" dur="2s"/></object>
        <object id="b" kind="media" type="image" src="b.png"/></object>)~"));
    EXPECT_EQ(doc.root.children.at(0).timing.begin, source::BeginValue{source::ClickTrigger{"b"}});
}

TEST(SourceParse, SchemaErrors)
{
    EXPECT_EQ(parse_error_code(wrap(R"(<object id="r" kind="par" bogus="1"/>)")), "SchemaError");
    EXPECT_EQ(parse_error_code(wrap(R"(<object id="r" kind="par"><frob/></object>)")), "SchemaError");
    EXPECT_EQ(parse_error_code(wrap(R"(<object id="r" kind="blob"/>)")), "SchemaError");
    EXPECT_EQ(parse_error_code(wrap(R"(<object id="r" kind="par"><timing dur="5"/></object>)")), "SchemaError");
    EXPECT_EQ(parse_error_code(R"(<doc xmlns="urn:other" width="1" height="1"><object id="r" kind="par"/></doc>)"),
              "SchemaError");
    EXPECT_EQ(parse_error_code("<doc"), "XmlSyntaxError");
}

TEST(SourceValidate, ValidTwoObjectDocument)
{
    auto doc = source::parse_source(wrap(R"(<object id="r" kind="seq">
        <object id="a" kind="media" type="image" src="a.png"><timing dur="1s"/></object>
        <object id="b" kind="media" type="audio" src="b.mp3"/></object>)"));
    auto report = source::validate_source(doc);
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.errors.size(), 0U);
}

TEST(SourceValidate, DanglingClickTarget)
{
    EXPECT_TRUE(has_error(R"~(<object id="r" kind="excl">
        <object id="m" kind="media" type="image" src="x.png"><timing begin="click(ghost)"/></object></object>)~",
                          "DanglingClickTarget"));
}

TEST(SourceValidate, MediaDurOnImage)
{
    EXPECT_TRUE(has_error(R"(<object id="r" kind="par">
        <object id="m" kind="media" type="image" src="x.png"><timing dur="media"/></object></object>)",
                          "MediaDurOnStaticMedia"));
}

TEST(SourceValidate, StructuralCodes)
{
    EXPECT_TRUE(has_error(R"(<object id="r" kind="par"><object id="m" kind="media" type="image" src="x.png">
        <spatial left="0" top="0" width="101%" height="10"/></object></object>)",
                          "PercentOutOfRange"));
    EXPECT_TRUE(has_error(R"(<object id="r" kind="par"><object id="m" kind="media" type="image" src="x.png">
        <spatial left="-5" top="0" width="10" height="10"/></object></object>)",
                          "NegativePixel"));
    EXPECT_TRUE(has_error(R"(<object id="r" kind="par"><object id="m" kind="media" type="image" src="x.png">
        <spatial left="0" top="0" width="center" height="10"/></object></object>)",
                          "CenterNotAllowed"));
    EXPECT_TRUE(has_error(R"(<object id="m" kind="media" type="image" src="x.png"/>)", "RootNotContainer"));
    EXPECT_TRUE(has_error(R"~(<object id="r" kind="seq">
        <object id="m" kind="media" type="image" src="x.png"><timing begin="click(r)"/></object></object>)~",
                          "EventBeginInSeq"));
    EXPECT_TRUE(has_error(R"(<object id="r" kind="par"><timing dur="media"/></object>)", "MediaDurOnContainer"));
    EXPECT_TRUE(has_error(R"(<object id="r" kind="par"><object id="m" kind="media" type="image"/></object>)",
                          "MissingMediaRef"));
    EXPECT_TRUE(has_error(R"(<object id="r" kind="par"><object id="m" kind="media" type="text" src="x"/></object>)",
                          "TextSrcMismatch"));
    EXPECT_TRUE(has_error(R"(<object id="r" kind="par"><object id="m" kind="media" type="image" src="x.png"/>
        <object id="r-m" kind="par"/></object>)",
                          "IdCollision"));
}

TEST(SourceValidate, InvalidCanvas)
{
    auto doc = source::parse_source(R"(<doc width="0" height="600"><object id="r" kind="par"/></doc>)");
    EXPECT_TRUE(source::validate_source(doc).has_error("InvalidCanvas"));
}

TEST(SourceParse, Deterministic)
{
    for (const auto& path : test::corpus_files()) {
        auto bytes = test::read_file(path);
        EXPECT_EQ(source::parse_source(bytes), source::parse_source(bytes)) << path;
    }
}

TEST(SourceValidate, CorpusIsValid)
{
    auto files = test::corpus_files();
    EXPECT_GE(files.size(), 20U);
    for (const auto& path : files) {
        auto report = source::validate_source(test::load_source(path));
        EXPECT_TRUE(report.ok()) << path << ": " << (report.ok() ? "" : report.errors.front().code);
    }
}

TEST(Length, ParseAndFormat)
{
    EXPECT_EQ(source::parse_length("12"), Length::px(12));
    EXPECT_EQ(source::parse_length("12px"), Length::px(12));
    EXPECT_EQ(source::parse_length("33.333%"), Length::milli_percent(33333));
    EXPECT_EQ(source::parse_length("center"), Length::center());
    EXPECT_FALSE(source::parse_length("1.2345%"));
    EXPECT_EQ(source::format_length(Length::milli_percent(12500)), "12.5%");
}

} // namespace
} // namespace medex
