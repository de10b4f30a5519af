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

#include "medex/clock_value.hpp"
#include "medex/xml.hpp"

#include <cctype>
#include <map>
#include <set>

namespace medex::source {

namespace {

std::string object_path(const std::string& parentPath, const std::string& id)
{
    return parentPath + "/object[@id='" + id + "']";
}

[[noreturn]] void schema_error(const std::string& message, const std::string& path)
{
    throw Error("SchemaError", message, path);
}

bool in_source_ns(const xml::Node& n)
{
    return n.ns.empty() || n.ns == kNamespace;
}

std::optional<std::int64_t> parse_integer(std::string_view s)
{
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    if (s.empty() || s.size() > 12)
        return std::nullopt;
    std::int64_t v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return std::nullopt;
        v = v * 10 + (c - '0');
    }
    return negative ? -v : v;
}

std::string trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return std::string(s);
}

void check_attributes(const xml::Node& node, const std::set<std::string_view>& allowed,
                      const std::string& path)
{
    for (const auto& a : node.attributes) {
        if (!a.ns.empty())
            continue; // foreign-namespace attributes are ignored
        if (allowed.count(a.name) == 0)
            schema_error("unknown attribute '" + a.name + "' on <" + node.name + ">", path);
    }
}

std::int64_t require_integer(const xml::Node& node, std::string_view name, const std::string& path)
{
    const auto* raw = node.attr(name);
    if (raw == nullptr)
        schema_error("missing attribute '" + std::string(name) + "'", path);
    auto v = parse_integer(*raw);
    if (!v)
        schema_error("attribute '" + std::string(name) + "' is not an integer: " + *raw, path);
    return *v;
}

SpatialSpec parse_spatial(const xml::Node& node, const std::string& path)
{
    check_attributes(node, {"left", "top", "width", "height", "z"}, path);
    SpatialSpec spec;
    auto length = [&](std::string_view name, Length& out) {
        if (const auto* raw = node.attr(name)) {
            auto v = parse_length(*raw);
            if (!v)
                schema_error("invalid length '" + *raw + "' for " + std::string(name), path);
            out = *v;
        }
    };
    length("left", spec.left);
    length("top", spec.top);
    length("width", spec.width);
    length("height", spec.height);
    if (node.attr("z") != nullptr)
        spec.z = require_integer(node, "z", path);
    return spec;
}

TimingSpec parse_timing(const xml::Node& node, const std::string& path)
{
    check_attributes(node, {"begin", "dur"}, path);
    TimingSpec spec;
    if (const auto* raw = node.attr("begin")) {
        std::string_view v = *raw;
        if (v.starts_with("click(") && v.ends_with(")")) {
            std::string target(v.substr(6, v.size() - 7));
            if (target.empty())
                schema_error("empty click target", path);
            spec.begin = ClickTrigger{std::move(target)};
        }
        else if (auto ms = parse_source_clock(v)) {
            spec.begin = *ms;
        }
        else {
            schema_error("invalid begin value '" + *raw + "'", path);
        }
    }
    if (const auto* raw = node.attr("dur")) {
        if (*raw == "media")
            spec.dur = DurValue::media();
        else if (*raw == "indefinite")
            spec.dur = DurValue::indefinite();
        else if (auto ms = parse_source_clock(*raw))
            spec.dur = DurValue::fixed(*ms);
        else
            schema_error("invalid dur value '" + *raw + "'", path);
    }
    return spec;
}

std::optional<ObjectKind> kind_from_string(std::string_view s)
{
    if (s == "par")
        return ObjectKind::par;
    if (s == "seq")
        return ObjectKind::seq;
    if (s == "excl")
        return ObjectKind::excl;
    if (s == "media")
        return ObjectKind::media;
    return std::nullopt;
}

ObjectNode parse_object(const xml::Node& node, const std::string& parentPath, std::set<std::string>& ids)
{
    const auto* id = node.attr("id");
    if (id == nullptr)
        schema_error("object without id", parentPath);
    std::string path = object_path(parentPath, *id);
    check_attributes(node, {"id", "kind", "type", "src", "font", "fontSize", "color"}, path);

    ObjectNode obj;
    obj.id = *id;
    if (!ids.insert(obj.id).second)
        throw Error("DuplicateId", "duplicate object id '" + obj.id + "'", path);

    const auto* kindAttr = node.attr("kind");
    if (kindAttr == nullptr)
        schema_error("object without kind", path);
    auto kind = kind_from_string(*kindAttr);
    if (!kind)
        schema_error("unknown object kind '" + *kindAttr + "'", path);
    obj.kind = *kind;

    if (const auto* typeAttr = node.attr("type")) {
        auto type = media_type_from_string(*typeAttr);
        if (!type)
            schema_error("unknown media type '" + *typeAttr + "'", path);
        MediaRef ref;
        ref.type = *type;
        ref.src = node.attr_or("src");
        if (ref.type == MediaType::text) {
            TextStyle style;
            if (const auto* font = node.attr("font"))
                style.fontFamilyName = *font;
            if (node.attr("fontSize") != nullptr) {
                std::string raw = *node.attr("fontSize");
                if (raw.ends_with("px"))
                    raw.resize(raw.size() - 2);
                auto size = parse_integer(raw);
                if (!size)
                    schema_error("invalid fontSize '" + *node.attr("fontSize") + "'", path);
                style.fontSizePx = *size;
            }
            if (const auto* color = node.attr("color")) {
                auto rgb = parse_rgb(*color);
                if (!rgb)
                    schema_error("invalid color '" + *color + "' (expected #RRGGBB)", path);
                style.color = *rgb;
            }
            ref.textStyle = style;
            ref.textContent = trim(node.direct_text());
        }
        else {
            for (std::string_view attr : {"font", "fontSize", "color"}) {
                if (node.attr(attr) != nullptr)
                    schema_error("attribute '" + std::string(attr) + "' only applies to text media", path);
            }
        }
        obj.media = std::move(ref);
    }
    else {
        for (std::string_view attr : {"src", "font", "fontSize", "color"}) {
            if (node.attr(attr) != nullptr)
                schema_error("attribute '" + std::string(attr) + "' requires a media type", path);
        }
        if (obj.kind == ObjectKind::media)
            schema_error("media object without type", path);
    }

    if (node.has_significant_text() && !(obj.media && obj.media->type == MediaType::text))
        schema_error("unexpected text content", path);

    bool sawSpatial = false;
    bool sawTiming = false;
    for (const auto* child : node.element_children()) {
        if (!in_source_ns(*child))
            continue;
        if (child->name == "spatial") {
            if (sawSpatial)
                schema_error("more than one <spatial>", path);
            sawSpatial = true;
            obj.spatial = parse_spatial(*child, path + "/spatial");
        }
        else if (child->name == "timing") {
            if (sawTiming)
                schema_error("more than one <timing>", path);
            sawTiming = true;
            obj.timing = parse_timing(*child, path + "/timing");
        }
        else if (child->name == "object") {
            obj.children.push_back(parse_object(*child, path, ids));
        }
        else {
            schema_error("unknown element <" + child->name + ">", path);
        }
    }
    return obj;
}

void validate_length(const Length& length, std::string_view attr, bool centerAllowed,
                     const std::string& path, ValidationReport& report)
{
    std::string where = path + "/spatial@" + std::string(attr);
    switch (length.unit) {
    case Length::Unit::pixels:
        if (length.value < 0)
            report.error("NegativePixel", where, "negative pixel value " + std::to_string(length.value));
        break;
    case Length::Unit::percent:
        if (length.value < 0 || length.value > 100000)
            report.error("PercentOutOfRange", where, "percentage " + format_length(length) + " outside [0, 100]");
        break;
    case Length::Unit::center:
        if (!centerAllowed)
            report.error("CenterNotAllowed", where, "'center' is only valid for left and top");
        break;
    }
}

struct Validator {
    const SourceDocument& doc;
    ValidationReport report;
    std::map<std::string, int> idCounts;

    void collect(const ObjectNode& obj)
    {
        ++idCounts[obj.id];
        for (const auto& c : obj.children)
            collect(c);
    }

    void check(const ObjectNode& obj, const ObjectNode* parent, const std::string& parentPath)
    {
        std::string path = object_path(parentPath, obj.id);

        if (!xml::is_xml_name(obj.id))
            report.error("InvalidId", path, "object id '" + obj.id + "' is not a valid XML name");
        if (idCounts[obj.id] > 1) {
            report.error("DuplicateId", path, "duplicate object id '" + obj.id + "'");
            idCounts[obj.id] = -1; // report once
        }
        for (std::string_view prefix : {"r-", "t-"}) {
            if (obj.id.starts_with(prefix) && idCounts.count(obj.id.substr(2)) != 0) {
                report.error("IdCollision", path,
                             "id '" + obj.id + "' collides with a derived id of object '" + obj.id.substr(2) + "'");
            }
        }

        if (obj.kind == ObjectKind::media) {
            if (!obj.children.empty())
                report.error("MediaWithChildren", path, "media object has children");
            if (!obj.media)
                report.error("MissingMediaRef", path, "media object without media reference");
        }
        else if (obj.media) {
            report.error("ContainerWithMediaRef", path, "container object carries a media reference");
        }

        if (obj.media) {
            const auto& m = *obj.media;
            bool isText = m.type == MediaType::text;
            if (!isText && !m.src) {
                report.error("MissingMediaRef", path, "non-text media without src");
            }
            else if (isText == m.src.has_value() || isText != m.textContent.has_value()
                || isText != m.textStyle.has_value()) {
                report.error("TextSrcMismatch", path,
                             isText ? "text media must carry content and no src"
                                    : "non-text media must carry a src and no text content");
            }
            if (m.textStyle && m.textStyle->fontSizePx <= 0)
                report.error("InvalidFontSize", path, "font size must be positive");
        }

        if (obj.spatial) {
            const auto& s = *obj.spatial;
            validate_length(s.left, "left", true, path, report);
            validate_length(s.top, "top", true, path, report);
            validate_length(s.width, "width", false, path, report);
            validate_length(s.height, "height", false, path, report);
        }

        const auto& t = obj.timing;
        if (const auto* offset = std::get_if<std::int64_t>(&t.begin)) {
            if (*offset < 0)
                report.error("NegativeOffset", path + "/timing@begin", "negative begin offset");
        }
        else {
            const auto& click = std::get<ClickTrigger>(t.begin);
            if (idCounts.count(click.targetId) == 0)
                report.error("DanglingClickTarget", path + "/timing@begin",
                             "click target '" + click.targetId + "' does not exist");
            if (parent != nullptr && parent->kind == ObjectKind::seq)
                report.error("EventBeginInSeq", path + "/timing@begin",
                             "children of a seq cannot begin on an event");
        }

        switch (t.dur.kind) {
        case DurValue::Kind::fixed:
            if (t.dur.ms <= 0)
                report.error("NonPositiveDuration", path + "/timing@dur", "fixed duration must be positive");
            break;
        case DurValue::Kind::media:
            if (obj.kind != ObjectKind::media)
                report.error("MediaDurOnContainer", path + "/timing@dur", "dur=media on a container");
            else if (obj.media && !is_continuous(obj.media->type))
                report.error("MediaDurOnStaticMedia", path + "/timing@dur",
                             "dur=media on " + std::string(to_string(obj.media->type)) + " media");
            break;
        default:
            break;
        }

        for (const auto& c : obj.children)
            check(c, &obj, path);
    }
};

} // namespace

std::string_view to_string(ObjectKind kind)
{
    switch (kind) {
    case ObjectKind::par: return "par";
    case ObjectKind::seq: return "seq";
    case ObjectKind::excl: return "excl";
    case ObjectKind::media: return "media";
    }
    return "par";
}

std::optional<Length> parse_length(std::string_view s)
{
    if (s == "center")
        return Length::center();
    if (s.ends_with("%")) {
        s.remove_suffix(1);
        bool negative = false;
        if (!s.empty() && s[0] == '-') {
            negative = true;
            s.remove_prefix(1);
        }
        auto dot = s.find('.');
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
        if (dot != std::string_view::npos && (frac.empty() || frac.size() > 3))
            return std::nullopt;
        auto w = parse_integer(whole);
        if (!w || whole.starts_with("+") || whole.starts_with("-"))
            return std::nullopt;
        std::int64_t milli = *w * 1000;
        if (!frac.empty()) {
            auto f = parse_integer(frac);
            if (!f || frac.starts_with("+") || frac.starts_with("-"))
                return std::nullopt;
            std::int64_t scaled = *f;
            for (std::size_t i = frac.size(); i < 3; ++i)
                scaled *= 10;
            milli += scaled;
        }
        return Length::milli_percent(negative ? -milli : milli);
    }
    if (s.ends_with("px"))
        s.remove_suffix(2);
    if (s.starts_with("+"))
        return std::nullopt;
    auto v = parse_integer(s);
    if (!v)
        return std::nullopt;
    return Length::px(*v);
}

std::string format_length(const Length& length)
{
    switch (length.unit) {
    case Length::Unit::pixels:
        return std::to_string(length.value);
    case Length::Unit::center:
        return "center";
    case Length::Unit::percent: {
        std::int64_t v = length.value < 0 ? -length.value : length.value;
        std::string out = length.value < 0 ? "-" : "";
        out += std::to_string(v / 1000);
        if (std::int64_t frac = v % 1000; frac != 0) {
            std::string digits = std::to_string(frac + 1000).substr(1);
            while (digits.back() == '0')
                digits.pop_back();
            out += "." + digits;
        }
        return out + "%";
    }
    }
    return {};
}

SourceDocument parse_source(std::string_view bytes)
{
    xml::Node root = xml::parse(bytes);
    const std::string path = "/doc";
    if (root.name != "doc" || !in_source_ns(root))
        schema_error("root element must be <doc> in namespace " + std::string(kNamespace), "/");
    check_attributes(root, {"width", "height", "title", "base"}, path);

    SourceDocument doc;
    doc.canvasWidth = require_integer(root, "width", path);
    doc.canvasHeight = require_integer(root, "height", path);
    doc.title = root.attr_or("title").value_or("");
    doc.baseUri = root.attr_or("base").value_or("");

    if (root.has_significant_text())
        schema_error("unexpected text content", path);

    std::set<std::string> ids;
    bool sawRoot = false;
    for (const auto* child : root.element_children()) {
        if (!in_source_ns(*child))
            continue;
        if (child->name != "object")
            schema_error("unknown element <" + child->name + ">", path);
        if (sawRoot)
            schema_error("<doc> must contain exactly one root object", path);
        sawRoot = true;
        doc.root = parse_object(*child, path, ids);
    }
    if (!sawRoot)
        schema_error("<doc> must contain exactly one root object", path);
    return doc;
}

ValidationReport validate_source(const SourceDocument& doc)
{
    Validator v{doc, {}, {}};
    if (doc.canvasWidth <= 0 || doc.canvasHeight <= 0)
        v.report.error("InvalidCanvas", "/doc", "canvas dimensions must be positive");
    if (!doc.root.is_container())
        v.report.error("RootNotContainer", "/doc", "root object must be par, seq or excl");
    v.collect(doc.root);
    v.check(doc.root, nullptr, "/doc");
    return std::move(v.report);
}

} // namespace medex::source
