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

#include <cctype>
#include <set>

namespace medex::intermediate {

namespace {

const std::string kNs(kNamespace);
const std::string kXmlNs(xml::kXmlNamespace);

[[noreturn]] void schema_error(const std::string& message, const std::string& path)
{
    throw Error("SchemaError", message, path);
}

std::optional<std::int64_t> parse_integer(std::string_view s)
{
    bool negative = false;
    if (!s.empty() && s[0] == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    if (s.empty() || s.size() > 15)
        return std::nullopt;
    std::int64_t v = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return std::nullopt;
        v = v * 10 + (c - '0');
    }
    return negative ? -v : v;
}

// ---- writing -------------------------------------------------------------

xml::Node element(std::string_view name)
{
    return xml::Node::element(kNs, std::string(name));
}

std::string begin_token(const Begin& b)
{
    return b.kind == Begin::Kind::event ? "click(" + b.clickTarget + ")" : std::to_string(b.ms);
}

std::string dur_token(const Duration& d)
{
    switch (d.kind) {
    case Duration::Kind::media: return "media";
    case Duration::Kind::indefinite: return "indefinite";
    default: return std::to_string(d.ms);
    }
}

xml::Node write_region(const RegionNode& r)
{
    auto n = element("region");
    n.set_attr(kXmlNs, "id", r.regionId);
    n.set_attr("left", r.relLeft.to_string());
    n.set_attr("top", r.relTop.to_string());
    n.set_attr("width", r.width.to_string());
    n.set_attr("height", r.height.to_string());
    n.set_attr("absLeft", r.absLeft.to_string());
    n.set_attr("absTop", r.absTop.to_string());
    n.set_attr("z", std::to_string(r.z));
    for (const auto& c : r.children)
        n.append(write_region(c));
    return n;
}

xml::Node write_time_node(const TimeNode& t)
{
    auto n = element(t.is_leaf() ? "media" : to_string(t.kind));
    n.set_attr(kXmlNs, "id", t.timeId);
    if (t.is_leaf())
        n.set_attr("objectId", t.objectId);
    if (t.begin.kind != Begin::Kind::unresolved)
        n.set_attr("begin", begin_token(t.begin));
    if (t.dur.kind != Duration::Kind::unresolved)
        n.set_attr("dur", dur_token(t.dur));
    if (t.offset != 0)
        n.set_attr("offset", std::to_string(t.offset));
    for (const auto& c : t.children)
        n.append(write_time_node(c));
    return n;
}

// ---- reading -------------------------------------------------------------

struct Reader {
    ValidationReport report;

    bool ours(const xml::Node& n) const { return n.ns == kNs; }

    void check_attributes(const xml::Node& n, const std::set<std::string_view>& allowed,
                          const std::string& path, bool allowXmlId = false)
    {
        for (const auto& a : n.attributes) {
            if (a.ns.empty()) {
                if (allowed.count(a.name) == 0)
                    schema_error("unknown attribute '" + a.name + "' on <" + n.name + ">", path);
            }
            else if (a.ns == kXmlNs && a.name == "id" && allowXmlId) {
                continue;
            }
            else {
                report.warn("ForeignContentDropped", path, "dropped foreign attribute '" + a.name + "'");
            }
        }
    }

    std::string require(const xml::Node& n, std::string_view name, const std::string& path)
    {
        if (const auto* v = n.attr(name))
            return *v;
        schema_error("missing attribute '" + std::string(name) + "' on <" + n.name + ">", path);
    }

    std::string require_id(const xml::Node& n, const std::string& path)
    {
        if (const auto* v = n.attr(kXmlNs, "id"))
            return *v;
        schema_error("missing xml:id on <" + n.name + ">", path);
    }

    std::int64_t require_int(const xml::Node& n, std::string_view name, const std::string& path)
    {
        auto raw = require(n, name, path);
        auto v = parse_integer(raw);
        if (!v)
            schema_error("attribute '" + std::string(name) + "' is not an integer: " + raw, path);
        return *v;
    }

    // Element children in our namespace; foreign ones are dropped with a warning.
    std::vector<const xml::Node*> own_children(const xml::Node& n, const std::string& path)
    {
        if (n.has_significant_text())
            schema_error("unexpected text in <" + n.name + ">", path);
        std::vector<const xml::Node*> out;
        for (const auto* c : n.element_children()) {
            if (ours(*c))
                out.push_back(c);
            else
                report.warn("ForeignContentDropped", path, "dropped foreign element <" + c->name + ">");
        }
        return out;
    }

    Head read_head(const xml::Node& n)
    {
        const std::string path = "/document/head";
        check_attributes(n, {}, path);
        if (n.has_significant_text())
            schema_error("unexpected text in <head>", path);
        Head head;
        for (const auto* c : n.element_children()) {
            if (!ours(*c)) {
                head.foreign.push_back(*c);
                continue;
            }
            if (c->name != "meta")
                schema_error("unknown element <" + c->name + "> in head", path);
            check_attributes(*c, {"name", "content"}, path + "/meta");
            head.meta.push_back({require(*c, "name", path), require(*c, "content", path)});
        }
        return head;
    }

    PixelValue pixel(const xml::Node& n, std::string_view name, const std::string& path)
    {
        auto raw = require(n, name, path);
        if (auto v = parse_integer(raw))
            return *v;
        return PixelValue::symbolic(raw);
    }

    RegionNode read_region(const xml::Node& n, const std::string& parentPath)
    {
        std::string path = parentPath + "/region";
        if (n.name != "region")
            schema_error("unknown element <" + n.name + "> in layout", parentPath);
        check_attributes(n, {"left", "top", "width", "height", "absLeft", "absTop", "z"}, path, true);
        RegionNode r;
        r.regionId = require_id(n, path);
        path += "[@xml:id='" + r.regionId + "']";
        r.relLeft = pixel(n, "left", path);
        r.relTop = pixel(n, "top", path);
        r.width = pixel(n, "width", path);
        r.height = pixel(n, "height", path);
        r.absLeft = pixel(n, "absLeft", path);
        r.absTop = pixel(n, "absTop", path);
        r.z = require_int(n, "z", path);
        for (const auto* c : own_children(n, path))
            r.children.push_back(read_region(*c, path));
        return r;
    }

    TimeNode read_time_node(const xml::Node& n, const std::string& parentPath)
    {
        TimeNode t;
        if (n.name == "par")
            t.kind = TimeNode::Kind::par;
        else if (n.name == "seq")
            t.kind = TimeNode::Kind::seq;
        else if (n.name == "excl")
            t.kind = TimeNode::Kind::excl;
        else if (n.name == "media")
            t.kind = TimeNode::Kind::leaf;
        else
            schema_error("unknown element <" + n.name + "> in timing", parentPath);

        std::string path = parentPath + "/" + n.name;
        if (t.is_leaf())
            check_attributes(n, {"objectId", "begin", "dur", "offset"}, path, true);
        else
            check_attributes(n, {"begin", "dur", "offset"}, path, true);
        t.timeId = require_id(n, path);
        path += "[@xml:id='" + t.timeId + "']";
        if (t.is_leaf())
            t.objectId = require(n, "objectId", path);

        if (const auto* b = n.attr("begin")) {
            std::string_view v = *b;
            if (v.starts_with("click(") && v.ends_with(")") && v.size() > 7)
                t.begin = Begin::on_click(std::string(v.substr(6, v.size() - 7)));
            else if (auto ms = parse_integer(v))
                t.begin = Begin::at(*ms);
            else
                schema_error("invalid begin '" + *b + "'", path);
        }
        if (const auto* d = n.attr("dur")) {
            if (*d == "media")
                t.dur = Duration::media();
            else if (*d == "indefinite")
                t.dur = Duration::indefinite();
            else if (auto ms = parse_integer(*d))
                t.dur = Duration::of(*ms);
            else
                schema_error("invalid dur '" + *d + "'", path);
        }
        if (n.attr("offset") != nullptr)
            t.offset = require_int(n, "offset", path);

        for (const auto* c : own_children(n, path))
            t.children.push_back(read_time_node(*c, path));
        return t;
    }

    Asset read_asset(const xml::Node& n, const std::string& parentPath)
    {
        std::string path = parentPath + "/asset";
        if (n.name != "asset")
            schema_error("unknown element <" + n.name + "> in media", parentPath);
        check_attributes(n, {"objectId", "type", "src"}, path);
        Asset a;
        a.objectId = require(n, "objectId", path);
        path += "[@objectId='" + a.objectId + "']";
        auto typeName = require(n, "type", path);
        auto type = media_type_from_string(typeName);
        if (!type)
            schema_error("unknown asset type '" + typeName + "'", path);
        a.type = *type;
        a.src = n.attr_or("src");
        for (const auto* c : own_children(n, path)) {
            if (c->name != "text")
                schema_error("unknown element <" + c->name + "> in asset", path);
            if (a.text)
                schema_error("asset carries more than one <text>", path);
            check_attributes(*c, {"font", "fontSize", "color"}, path + "/text");
            TextPayload payload;
            payload.content = c->direct_text();
            payload.style.fontFamilyName = require(*c, "font", path);
            payload.style.fontSizePx = require_int(*c, "fontSize", path);
            auto color = parse_rgb(require(*c, "color", path));
            if (!color)
                schema_error("invalid color on <text>", path);
            payload.style.color = *color;
            a.text = std::move(payload);
        }
        return a;
    }

    IntermediateDocument read(const xml::Node& root)
    {
        if (root.name != "document" || !ours(root))
            schema_error("root element must be <document> in namespace " + kNs, "/");
        const std::string path = "/document";
        check_attributes(root, {"version"}, path);
        if (require(root, "version", path) != kVersion)
            schema_error("unsupported version '" + *root.attr("version") + "'", path);

        auto sections = own_children(root, path);
        static constexpr std::string_view order[] = {"head", "layout", "timing", "references", "media"};
        if (sections.size() != 5)
            schema_error("<document> must contain exactly the sections head, layout, timing, references, media",
                         path);
        for (std::size_t i = 0; i < 5; ++i) {
            if (sections[i]->name != order[i])
                schema_error("expected <" + std::string(order[i]) + "> but found <" + sections[i]->name + ">",
                             path);
        }

        IntermediateDocument doc;
        doc.head = read_head(*sections[0]);

        const auto& layout = *sections[1];
        check_attributes(layout, {"width", "height"}, path + "/layout");
        doc.canvasWidth = require_int(layout, "width", path + "/layout");
        doc.canvasHeight = require_int(layout, "height", path + "/layout");
        for (const auto* c : own_children(layout, path + "/layout"))
            doc.layout.push_back(read_region(*c, path + "/layout"));

        const auto& timing = *sections[2];
        check_attributes(timing, {}, path + "/timing");
        auto roots = own_children(timing, path + "/timing");
        if (roots.size() != 1)
            schema_error("<timing> must contain exactly one root time node", path + "/timing");
        doc.timing = read_time_node(*roots[0], path + "/timing");

        const auto& refs = *sections[3];
        check_attributes(refs, {}, path + "/references");
        for (const auto* c : own_children(refs, path + "/references")) {
            if (c->name != "ref")
                schema_error("unknown element <" + c->name + "> in references", path + "/references");
            std::string refPath = path + "/references/ref";
            check_attributes(*c, {"objectId", "region", "time"}, refPath);
            doc.references.push_back(
                {require(*c, "objectId", refPath), require(*c, "region", refPath), require(*c, "time", refPath)});
        }

        const auto& media = *sections[4];
        check_attributes(media, {}, path + "/media");
        for (const auto* c : own_children(media, path + "/media"))
            doc.media.push_back(read_asset(*c, path + "/media"));
        return doc;
    }
};

template <typename Node, typename Pred>
const Node* find_in_tree(const std::vector<Node>& nodes, Pred pred)
{
    for (const auto& n : nodes) {
        if (pred(n))
            return &n;
        if (const auto* hit = find_in_tree(n.children, pred))
            return hit;
    }
    return nullptr;
}

bool is_cross_reference_code(const std::string& code)
{
    static const std::set<std::string> codes = {
        "DanglingRegionRef", "DanglingTimeRef", "DanglingObjectRef", "DanglingClickTarget",
        "RegionReuse", "TimeNodeReuse", "RefToContainer", "LeafObjectMismatch",
        "UnreferencedAsset", "UnreferencedLeaf", "MultiplyReferencedAsset",
    };
    return codes.count(code) != 0;
}

} // namespace

std::string_view to_string(TimeNode::Kind kind)
{
    switch (kind) {
    case TimeNode::Kind::par: return "par";
    case TimeNode::Kind::seq: return "seq";
    case TimeNode::Kind::excl: return "excl";
    case TimeNode::Kind::leaf: return "media";
    }
    return "par";
}

const std::string* Head::find(std::string_view name) const
{
    for (const auto& m : meta) {
        if (m.name == name)
            return &m.content;
    }
    return nullptr;
}

void Head::set(const std::string& name, std::string content)
{
    for (auto& m : meta) {
        if (m.name == name) {
            m.content = std::move(content);
            return;
        }
    }
    meta.push_back({name, std::move(content)});
}

const RegionNode* find_region(const IntermediateDocument& doc, std::string_view regionId)
{
    return find_in_tree(doc.layout, [&](const RegionNode& r) { return r.regionId == regionId; });
}

const TimeNode* find_time_node(const IntermediateDocument& doc, std::string_view timeId)
{
    if (doc.timing.timeId == timeId)
        return &doc.timing;
    return find_in_tree(doc.timing.children, [&](const TimeNode& t) { return t.timeId == timeId; });
}

const Asset* find_asset(const IntermediateDocument& doc, std::string_view objectId)
{
    for (const auto& a : doc.media) {
        if (a.objectId == objectId)
            return &a;
    }
    return nullptr;
}

const Reference* find_reference(const IntermediateDocument& doc, std::string_view objectId)
{
    for (const auto& r : doc.references) {
        if (r.objectId == objectId)
            return &r;
    }
    return nullptr;
}

std::string serialize_unchecked(const IntermediateDocument& doc)
{
    auto root = element("document");
    root.set_attr("version", std::string(kVersion));

    auto& head = root.append(element("head"));
    for (const auto& m : doc.head.meta) {
        auto meta = element("meta");
        meta.set_attr("name", m.name);
        meta.set_attr("content", m.content);
        head.append(std::move(meta));
    }
    for (const auto& f : doc.head.foreign)
        head.append(f);

    auto& layout = root.append(element("layout"));
    layout.set_attr("width", std::to_string(doc.canvasWidth));
    layout.set_attr("height", std::to_string(doc.canvasHeight));
    for (const auto& r : doc.layout)
        layout.append(write_region(r));

    root.append(element("timing")).append(write_time_node(doc.timing));

    auto& refs = root.append(element("references"));
    for (const auto& r : doc.references) {
        auto ref = element("ref");
        ref.set_attr("objectId", r.objectId);
        ref.set_attr("region", r.regionId);
        ref.set_attr("time", r.timeId);
        refs.append(std::move(ref));
    }

    auto& media = root.append(element("media"));
    for (const auto& a : doc.media) {
        auto asset = element("asset");
        asset.set_attr("objectId", a.objectId);
        asset.set_attr("type", std::string(to_string(a.type)));
        if (a.src)
            asset.set_attr("src", *a.src);
        if (a.text) {
            auto text = element("text");
            text.set_attr("font", a.text->style.fontFamilyName);
            text.set_attr("fontSize", std::to_string(a.text->style.fontSizePx));
            text.set_attr("color", format_rgb(a.text->style.color));
            if (!a.text->content.empty())
                text.append_text(a.text->content);
            asset.append(std::move(text));
        }
        media.append(std::move(asset));
    }

    return xml::write(root);
}

std::string serialize_intermediate(const IntermediateDocument& doc)
{
    auto report = validate_intermediate(doc);
    if (!report.ok()) {
        const auto& first = report.errors.front();
        throw Error("InvariantViolation", first.code + ": " + first.message, first.path);
    }
    return serialize_unchecked(doc);
}

ReadResult read_intermediate(std::string_view bytes)
{
    auto root = xml::parse(bytes);
    Reader reader;
    auto doc = reader.read(root);
    return {std::move(doc), std::move(reader.report)};
}

IntermediateDocument parse_intermediate(std::string_view bytes)
{
    auto result = read_intermediate(bytes);
    auto report = validate_intermediate(result.doc);
    for (const auto& e : report.errors) {
        if (is_cross_reference_code(e.code))
            throw Error("CrossRefViolation", e.code + ": " + e.message, e.path);
    }
    if (!report.ok()) {
        const auto& first = report.errors.front();
        throw Error("SchemaError", first.code + ": " + first.message, first.path);
    }
    return std::move(result.doc);
}

} // namespace medex::intermediate
