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

#include "medex/xhtml_backend.hpp"

#include "medex/clock_value.hpp"
#include "medex/smil_backend.hpp"

#include <map>
#include <set>
#include <sstream>

namespace medex {

namespace {

using intermediate::IntermediateDocument;
using intermediate::RegionNode;
using intermediate::TimeNode;

const std::string kHtmlNs(kXhtmlNamespace);
const std::string kTsNs(kTimesheetNamespace);

const std::string kDoctype =
    "<!DOCTYPE html PUBLIC \"-//W3C//DTD XHTML 1.0 Strict//EN\" "
    "\"http://www.w3.org/TR/xhtml1/DTD/xhtml1-strict.dtd\">";

xml::Node html(std::string name)
{
    return xml::Node::element(kHtmlNs, std::move(name));
}

std::string css_string(std::string_view s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        if (c == '\n') {
            out += "\\a ";
            continue;
        }
        out += c;
    }
    return out + "\"";
}

// Generic families are keywords and must stay unquoted.
std::string css_font_family(std::string_view family)
{
    static const std::set<std::string_view> generic = {"serif", "sans-serif", "monospace", "cursive", "fantasy",
                                                       "system-ui"};
    if (generic.count(family) != 0)
        return std::string(family);
    return css_string(family);
}

class PageBuilder {
public:
    PageBuilder(const IntermediateDocument& doc, const AssetPlan& plan) : doc_(doc), plan_(plan)
    {
        for (const auto& ref : doc.references)
            mediaByRegion_[ref.regionId].push_back(ref.objectId);
    }

    xml::Node region_div(const RegionNode& r)
    {
        auto div = html("div");
        div.set_attr("id", r.regionId);
        for (const auto& c : r.children)
            div.append(region_div(c));
        if (auto it = mediaByRegion_.find(r.regionId); it != mediaByRegion_.end()) {
            for (const auto& objectId : it->second)
                div.append(media_element(*intermediate::find_asset(doc_, objectId)));
        }
        return div;
    }

    xml::Node media_element(const intermediate::Asset& a)
    {
        const std::string classes = "medex-media " + std::string(kHiddenClass);
        xml::Node n;
        switch (a.type) {
        case MediaType::image:
            n = html("img");
            n.set_attr("alt", "");
            n.set_attr("src", plan_.pathByObject.at(a.objectId));
            n.set_attr("class", classes);
            break;
        case MediaType::audio:
        case MediaType::video:
            n = html(a.type == MediaType::audio ? "audio" : "video");
            n.set_attr("preload", "auto");
            n.set_attr("src", plan_.pathByObject.at(a.objectId));
            n.set_attr("class", classes);
            break;
        case MediaType::text:
            n = html("div");
            n.set_attr("class", "medex-text " + classes);
            if (!a.text->content.empty())
                n.append_text(a.text->content);
            break;
        }
        n.set_attr("id", a.objectId);
        return n;
    }

    xml::Node timesheet_node(const TimeNode& t, const TimeNode* parent)
    {
        auto n = xml::Node::element(kTsNs, t.is_leaf() ? "item" : std::string(intermediate::to_string(t.kind)));
        if (t.is_leaf())
            n.set_attr("select", "#" + t.objectId);

        bool inSeq = parent != nullptr && parent->kind == TimeNode::Kind::seq;
        if (inSeq) {
            if (t.offset != 0)
                n.set_attr("begin", format_ms(t.offset));
        }
        else if (t.begin.kind == Begin::Kind::static_offset) {
            n.set_attr("begin", format_ms(t.begin.ms));
        }
        else if (t.begin.kind == Begin::Kind::event) {
            n.set_attr("begin", "click(" + t.begin.clickTarget + ")");
        }

        if (t.dur.kind == Duration::Kind::static_ms)
            n.set_attr("dur", format_ms(t.dur.ms));
        else if (t.dur.kind == Duration::Kind::indefinite)
            n.set_attr("dur", "indefinite");

        for (const auto& c : t.children)
            n.append(timesheet_node(c, &t));
        return n;
    }

private:
    const IntermediateDocument& doc_;
    const AssetPlan& plan_;
    std::map<std::string, std::vector<std::string>> mediaByRegion_;
};

void css_region_rules(const RegionNode& r, std::ostringstream& css)
{
    css << "\n#" << r.regionId << " {\n"
        << "  position:absolute;\n"
        << "  left:" << r.relLeft.px << "px;\n"
        << "  top:" << r.relTop.px << "px;\n"
        << "  width:" << r.width.px << "px;\n"
        << "  height:" << r.height.px << "px;\n"
        << "  z-index:" << r.z << ";\n"
        << "}\n";
    for (const auto& c : r.children)
        css_region_rules(c, css);
}

std::string build_css(const IntermediateDocument& doc)
{
    std::ostringstream css;
    css << "/* Generated by " << (doc.head.find("generator") ? *doc.head.find("generator") : "medex") << " */\n"
        << "\n." << kHiddenClass << " {\n"
        << "  visibility:hidden;\n"
        << "}\n"
        << "\n.medex-media {\n"
        << "  position:absolute;\n"
        << "  left:0px;\n"
        << "  top:0px;\n"
        << "  width:100%;\n"
        << "  height:100%;\n"
        << "  margin:0px;\n"
        << "}\n"
        << "\n#" << kCanvasId << " {\n"
        << "  position:relative;\n"
        << "  width:" << doc.canvasWidth << "px;\n"
        << "  height:" << doc.canvasHeight << "px;\n"
        << "  overflow:hidden;\n"
        << "}\n";
    for (const auto& r : doc.layout)
        css_region_rules(r, css);
    for (const auto& a : doc.media) {
        if (!a.text)
            continue;
        css << "\n#" << a.objectId << " {\n"
            << "  color:" << format_rgb(a.text->style.color) << ";\n"
            << "  font-family:" << css_font_family(a.text->style.fontFamilyName) << ";\n"
            << "  font-size:" << a.text->style.fontSizePx << "px;\n"
            << "}\n";
    }
    return css.str();
}

void collect_region_ids(const RegionNode& r, std::vector<std::string>& out)
{
    out.push_back(r.regionId);
    for (const auto& c : r.children)
        collect_region_ids(c, out);
}

} // namespace

XhtmlBundle emit_xhtml(const IntermediateDocument& doc, const ExportOptions& options)
{
    auto report = intermediate::validate_intermediate(doc);
    if (!report.ok()) {
        const auto& first = report.errors.front();
        throw Error("InvariantViolation", first.code + ": " + first.message, first.path);
    }

    std::vector<std::string> ids{std::string(kCanvasId)};
    for (const auto& r : doc.layout)
        collect_region_ids(r, ids);
    for (const auto& a : doc.media)
        ids.push_back(a.objectId);
    std::set<std::string> seen;
    for (const auto& id : ids) {
        if (!seen.insert(id).second)
            throw Error("InvariantViolation", "id '" + id + "' would be declared twice in the XHTML page");
    }

    XhtmlBundle bundle;
    AssetPlan plan = plan_assets(doc, false, options);
    bundle.manifest = plan.copies;

    PageBuilder builder(doc, plan);

    auto root = html("html");
    root.set_attr(std::string(xml::kXmlNamespace), "lang", "en");

    auto& head = root.append(html("head"));
    const auto* title = doc.head.find("title");
    auto& titleNode = head.append(html("title"));
    if (title != nullptr && !title->empty())
        titleNode.append_text(*title);
    if (const auto* generator = doc.head.find("generator")) {
        auto meta = html("meta");
        meta.set_attr("name", "generator");
        meta.set_attr("content", *generator);
        head.append(std::move(meta));
    }
    auto link = html("link");
    link.set_attr("rel", "stylesheet");
    link.set_attr("type", "text/css");
    link.set_attr("href", bundle.stylesheetRef);
    head.append(std::move(link));
    auto script = html("script");
    script.set_attr("type", "text/javascript");
    script.set_attr("src", bundle.schedulerRef);
    head.append(std::move(script));
    auto& timesheet = head.append(xml::Node::element(kTsNs, "timesheet"));
    timesheet.append(builder.timesheet_node(doc.timing, nullptr));

    auto& body = root.append(html("body"));
    auto& canvas = body.append(html("div"));
    canvas.set_attr("id", std::string(kCanvasId));
    for (const auto& r : doc.layout)
        canvas.append(builder.region_div(r));

    xml::WriteOptions writeOptions;
    writeOptions.doctype = kDoctype;
    writeOptions.no_self_close = {"script", "div", "audio", "video", "title"};
    bundle.htmlBytes = xml::write(root, writeOptions);
    bundle.cssBytes = build_css(doc);
    return bundle;
}

} // namespace medex
