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

#include "medex/smil_importer.hpp"

#include "medex/assets.hpp"
#include "medex/clock_value.hpp"
#include "medex/resolver.hpp"
#include "medex/source.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace medex {

namespace {

using intermediate::RegionNode;
using source::ObjectKind;
using source::ObjectNode;

const std::set<std::string_view> kSmilNamespaces = {
    "http://www.w3.org/2001/SMIL20/Language",
    "http://www.w3.org/2005/SMIL21/Language",
    "http://www.w3.org/ns/SMIL",
    "",
};

const std::set<std::string_view> kUnsupported = {
    "animate", "set", "animateMotion", "animateColor", "transition", "transitionFilter",
    "priorityClass", "switch", "a", "area", "anchor", "brush", "animation", "textstream",
};

const std::set<std::string_view> kIgnoredTimingAttributes = {
    "end", "repeatCount", "repeatDur", "min", "max", "endsync", "restart", "restartDefault",
};

[[noreturn]] void unsupported(const std::string& what, const std::string& path)
{
    throw Error("UnsupportedFeature", what + " is not supported by the SMIL importer", path);
}

[[noreturn]] void schema_error(const std::string& message, const std::string& path)
{
    throw Error("SchemaError", message, path);
}

std::string trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return std::string(s);
}

std::int64_t floor_div(std::int64_t num, std::int64_t den)
{
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0)))
        --q;
    return q;
}

std::optional<std::int64_t> smil_length(const xml::Node& n, std::string_view attr, std::int64_t parentExtent,
                                        const std::string& path)
{
    const auto* raw = n.attr(attr);
    if (raw == nullptr)
        return std::nullopt;
    std::string v = trim(*raw);
    if (v == "auto" || v.empty())
        return std::nullopt;
    auto length = source::parse_length(v);
    if (!length || length->unit == source::Length::Unit::center)
        schema_error("invalid region " + std::string(attr) + " '" + *raw + "'", path);
    if (length->unit == source::Length::Unit::percent)
        return floor_div(2 * parentExtent * length->value + 100000, 200000);
    return length->value;
}

// SMIL box model along one axis: the extent wins over the far edge.
void resolve_axis(std::int64_t parent, std::optional<std::int64_t> start, std::optional<std::int64_t> extent,
                  std::optional<std::int64_t> end, std::int64_t& outStart, std::int64_t& outExtent)
{
    if (extent) {
        outExtent = *extent;
        if (start)
            outStart = *start;
        else if (end)
            outStart = parent - *end - *extent;
        else
            outStart = 0;
    }
    else {
        outStart = start.value_or(0);
        outExtent = std::max<std::int64_t>(0, parent - outStart - end.value_or(0));
    }
}

std::string element_id(const xml::Node& n)
{
    if (const auto* id = n.attr(xml::kXmlNamespace, "id"))
        return *id;
    if (const auto* id = n.attr("id"))
        return *id;
    return {};
}

std::string percent_decode(std::string_view s)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '%' && i + 2 < s.size() && std::isxdigit(static_cast<unsigned char>(s[i + 1]))
            && std::isxdigit(static_cast<unsigned char>(s[i + 2]))) {
            out += static_cast<char>(std::stoi(std::string(s.substr(i + 1, 2)), nullptr, 16));
            i += 2;
        }
        else {
            out += s[i];
        }
    }
    return out;
}

MediaType media_type_for_ref(std::string_view src)
{
    std::string name = uri_basename(src);
    auto dot = name.find_last_of('.');
    std::string ext = dot == std::string::npos ? "" : name.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    static const std::set<std::string> images = {"png", "jpg", "jpeg", "gif", "svg", "bmp", "webp"};
    static const std::set<std::string> audio = {"mp3", "wav", "ogg", "oga", "aac", "m4a", "flac", "au"};
    if (images.count(ext) != 0)
        return MediaType::image;
    if (audio.count(ext) != 0)
        return MediaType::audio;
    return MediaType::video;
}

struct PendingMedia {
    std::string objectId;
    std::string regionRef;
    intermediate::Asset asset;
};

class Importer {
public:
    ImportResult run(std::string_view bytes)
    {
        auto root = xml::parse(bytes);
        if (root.name != "smil" || kSmilNamespaces.count(root.ns) == 0)
            schema_error("root element must be <smil> in a SMIL Language namespace", "/");
        ns_ = root.ns;
        collect_ids(root);

        const xml::Node* head = nullptr;
        const xml::Node* body = nullptr;
        for (const auto* c : children(root, "/smil")) {
            if (c->name == "head" && head == nullptr && body == nullptr)
                head = c;
            else if (c->name == "body" && body == nullptr)
                body = c;
            else
                schema_error("unexpected <" + c->name + "> in <smil>", "/smil");
        }

        if (head != nullptr)
            read_head(*head);
        if (!doc_.head.find("title")) {
            report_.warn("MissingTitle", "/smil/head", "no title metadata; using 'Untitled'");
            doc_.head.meta.insert(doc_.head.meta.begin(), {"title", "Untitled"});
        }
        if (!doc_.head.find("generator"))
            doc_.head.set("generator", std::string(kGenerator));

        ObjectNode rootObject = read_body(body);

        build_layout();
        doc_.timing = resolve_timing(rootObject);
        for (auto& m : media_) {
            doc_.references.push_back({m.objectId, regionByObject_.at(m.objectId), time_id_for(m.objectId)});
            doc_.media.push_back(std::move(m.asset));
        }

        auto report = intermediate::validate_intermediate(doc_);
        if (!report.ok()) {
            const auto& first = report.errors.front();
            throw Error("SchemaError", "imported document is invalid: " + first.code + ": " + first.message,
                        first.path);
        }
        return {std::move(doc_), std::move(report_)};
    }

private:
    bool is_smil(const xml::Node& n) const { return n.ns == ns_; }

    std::vector<const xml::Node*> children(const xml::Node& n, const std::string& path)
    {
        std::vector<const xml::Node*> out;
        for (const auto* c : n.element_children()) {
            if (is_smil(*c))
                out.push_back(c);
            else
                report_.warn("ForeignContentDropped", path, "dropped foreign element <" + c->name + ">");
        }
        return out;
    }

    void collect_ids(const xml::Node& n)
    {
        if (auto id = element_id(n); !id.empty())
            usedIds_.insert(id);
        for (const auto* c : n.element_children())
            collect_ids(*c);
    }

    std::string fresh_id(const std::string& stem)
    {
        std::string id = stem;
        for (int n = 2; usedIds_.count(id) != 0 || usedIds_.count(time_id_for(id)) != 0; ++n)
            id = stem + "-" + std::to_string(n);
        usedIds_.insert(id);
        return id;
    }

    void read_head(const xml::Node& head)
    {
        const std::string path = "/smil/head";
        for (const auto* c : children(head, path)) {
            if (c->name == "meta") {
                auto name = c->attr_or("name");
                auto content = c->attr_or("content");
                if (name && content)
                    doc_.head.set(*name, *content);
            }
            else if (c->name == "layout") {
                if (auto type = c->attr_or("type"); type && *type != "text/smil-basic-layout")
                    unsupported("layout type '" + *type + "'", path + "/layout");
                layout_ = c;
            }
            else if (c->name == "metadata" || c->name == "customAttributes" || c->name == "paramGroup") {
                report_.warn("SkippedHeadElement", path, "skipped <" + c->name + ">");
            }
            else if (kUnsupported.count(c->name) != 0) {
                unsupported("<" + c->name + ">", path);
            }
            else {
                schema_error("unknown element <" + c->name + "> in head", path);
            }
        }
    }

    ObjectNode read_body(const xml::Node* body)
    {
        const std::string path = "/smil/body";
        std::vector<ObjectNode> items;
        if (body != nullptr) {
            for (const auto* c : children(*body, path)) {
                if (auto item = read_timed(*c, path, ObjectKind::seq))
                    items.push_back(std::move(*item));
            }
        }
        if (items.size() == 1 && items.front().is_container() && body != nullptr && body->attr("dur") == nullptr)
            return std::move(items.front());

        // SMIL's body behaves as a seq.
        ObjectNode root;
        root.kind = ObjectKind::seq;
        std::string bodyId = body != nullptr ? element_id(*body) : std::string{};
        root.id = bodyId.empty() ? fresh_id("body") : bodyId;
        if (body != nullptr)
            read_timing_attributes(*body, root, path, std::nullopt);
        root.children = std::move(items);
        return root;
    }

    void read_timing_attributes(const xml::Node& n, ObjectNode& obj, const std::string& path,
                                std::optional<ObjectKind> parentKind)
    {
        for (const auto& a : n.attributes) {
            if (a.ns.empty() && kIgnoredTimingAttributes.count(a.name) != 0)
                report_.warn("IgnoredTimingAttribute", path, "ignored timing attribute '" + a.name + "'");
        }

        if (const auto* raw = n.attr("begin")) {
            std::string v = trim(*raw);
            if (v.find(';') != std::string::npos)
                unsupported("multiple begin values", path);
            std::string target;
            for (std::string_view suffix : {".activateEvent", ".click"}) {
                if (v.size() > suffix.size() && std::string_view(v).ends_with(suffix))
                    target = v.substr(0, v.size() - suffix.size());
            }
            if (!target.empty()) {
                if (!xml::is_xml_name(target))
                    schema_error("invalid event target '" + target + "'", path);
                if (parentKind == ObjectKind::seq)
                    unsupported("event begin on a seq child", path);
                obj.timing.begin = source::ClickTrigger{target};
            }
            else {
                if (!v.empty() && v.front() == '+')
                    v.erase(0, 1);
                auto ms = parse_smil_clock(v);
                if (!ms)
                    unsupported("begin value '" + *raw + "'", path);
                obj.timing.begin = *ms;
            }
        }

        if (const auto* raw = n.attr("dur")) {
            std::string v = trim(*raw);
            if (v == "indefinite") {
                obj.timing.dur = source::DurValue::indefinite();
            }
            else if (v == "media") {
                if (obj.media && is_continuous(obj.media->type))
                    obj.timing.dur = source::DurValue::media();
            }
            else if (auto ms = parse_smil_clock(v)) {
                obj.timing.dur = source::DurValue::fixed(*ms);
            }
            else {
                schema_error("invalid dur '" + *raw + "'", path);
            }
        }
    }

    std::optional<ObjectNode> read_timed(const xml::Node& n, const std::string& parentPath, ObjectKind parentKind)
    {
        std::string path = parentPath + "/" + n.name;
        if (n.name == "prefetch") {
            report_.warn("SkippedPrefetch", path, "prefetch skipped");
            return std::nullopt;
        }
        if (kUnsupported.count(n.name) != 0)
            unsupported("<" + n.name + ">", path);

        ObjectNode obj;
        std::string id = element_id(n);
        if (n.name == "par" || n.name == "seq" || n.name == "excl") {
            obj.kind = n.name == "par" ? ObjectKind::par : n.name == "seq" ? ObjectKind::seq : ObjectKind::excl;
            obj.id = id.empty() ? fresh_id(n.name) : id;
            path += "[@xml:id='" + obj.id + "']";
            read_timing_attributes(n, obj, path, parentKind);
            for (const auto* c : children(n, path)) {
                if (auto child = read_timed(*c, path, obj.kind))
                    obj.children.push_back(std::move(*child));
            }
            return obj;
        }

        std::optional<MediaType> type;
        if (n.name == "img")
            type = MediaType::image;
        else if (n.name == "audio")
            type = MediaType::audio;
        else if (n.name == "video")
            type = MediaType::video;
        else if (n.name == "text")
            type = MediaType::text;
        else if (n.name == "ref")
            type = media_type_for_ref(n.attr_or("src").value_or(""));
        if (!type)
            schema_error("unknown element <" + n.name + ">", parentPath);

        obj.kind = ObjectKind::media;
        obj.id = id.empty() ? fresh_id("obj") : id;
        path += "[@xml:id='" + obj.id + "']";

        auto src = n.attr_or("src");
        intermediate::Asset asset;
        asset.objectId = obj.id;
        asset.type = *type;
        source::MediaRef ref;
        ref.type = *type;
        if (*type == MediaType::text) {
            std::string content;
            std::string raw = src.value_or("");
            if (raw.starts_with("data:")) {
                auto comma = raw.find(',');
                content = percent_decode(comma == std::string::npos ? "" : std::string_view(raw).substr(comma + 1));
            }
            else {
                content = raw;
                report_.warn("TextContentFromUri", path, "text content is taken from the src URI");
            }
            asset.text = intermediate::TextPayload{content, TextStyle{}};
            ref.textContent = content;
            ref.textStyle = TextStyle{};
        }
        else {
            if (!src)
                schema_error("media element without src", path);
            asset.src = *src;
            ref.src = *src;
        }
        obj.media = ref;
        read_timing_attributes(n, obj, path, parentKind);

        for (const auto* c : children(n, path)) {
            if (c->name == "param")
                report_.warn("SkippedParam", path, "media parameter skipped");
            else if (kUnsupported.count(c->name) != 0)
                unsupported("<" + c->name + ">", path);
            else
                schema_error("unknown element <" + c->name + "> in media element", path);
        }

        media_.push_back({obj.id, n.attr_or("region").value_or(""), std::move(asset)});
        return obj;
    }

    RegionNode geometry(const xml::Node& n, const RegionNode& parent, const std::string& path)
    {
        RegionNode r;
        std::int64_t pw = parent.width.px;
        std::int64_t ph = parent.height.px;
        std::int64_t left = 0;
        std::int64_t width = 0;
        std::int64_t top = 0;
        std::int64_t height = 0;
        resolve_axis(pw, smil_length(n, "left", pw, path), smil_length(n, "width", pw, path),
                     smil_length(n, "right", pw, path), left, width);
        resolve_axis(ph, smil_length(n, "top", ph, path), smil_length(n, "height", ph, path),
                     smil_length(n, "bottom", ph, path), top, height);
        r.relLeft = left;
        r.relTop = top;
        r.width = width;
        r.height = height;
        r.absLeft = parent.absLeft.px + left;
        r.absTop = parent.absTop.px + top;
        if (const auto* z = n.attr("z-index")) {
            auto v = source::parse_length(trim(*z));
            if (!v || v->unit != source::Length::Unit::pixels || z->find("px") != std::string::npos)
                schema_error("invalid z-index '" + *z + "'", path);
            r.z = v->value;
        }
        return r;
    }

    void build_regions(const xml::Node& n, const RegionNode& parent, const std::string& parentPath,
                       std::vector<RegionNode>& out)
    {
        std::string path = parentPath + "/region";
        std::string id = element_id(n);
        if (id.empty())
            id = fresh_id("region");
        path += "[@xml:id='" + id + "']";

        RegionNode r = geometry(n, parent, path);
        for (const auto* c : children(n, path)) {
            if (c->name == "region")
                build_regions(*c, r, path, r.children);
            else if (c->name == "regPoint")
                report_.warn("SkippedHeadElement", path, "skipped <regPoint>");
            else
                schema_error("unknown element <" + c->name + "> in region", path);
        }

        const auto& users = usersByRegion_[id];
        if (users.size() <= 1) {
            r.regionId = id;
            if (users.size() == 1)
                regionByObject_[users.front()] = id;
            out.push_back(std::move(r));
            return;
        }
        // One region per displayable object: duplicate shared regions.
        for (std::size_t i = 0; i < users.size(); ++i) {
            RegionNode copy = r;
            copy.regionId = id + "-" + std::to_string(i + 1);
            if (i != 0)
                copy.children.clear();
            regionByObject_[users[i]] = copy.regionId;
            out.push_back(std::move(copy));
        }
    }

    void build_layout()
    {
        const std::string path = "/smil/head/layout";
        RegionNode canvas;
        bool haveRootLayout = false;
        std::vector<const xml::Node*> regions;
        if (layout_ != nullptr) {
            for (const auto* c : children(*layout_, path)) {
                if (c->name == "root-layout") {
                    if (haveRootLayout)
                        schema_error("more than one <root-layout>", path);
                    haveRootLayout = true;
                    auto dimension = [&](std::string_view attr) -> std::int64_t {
                        const auto* raw = c->attr(attr);
                        if (raw == nullptr)
                            schema_error("root-layout without " + std::string(attr), path);
                        auto v = source::parse_length(trim(*raw));
                        if (!v || v->unit != source::Length::Unit::pixels)
                            schema_error("root-layout " + std::string(attr) + " must be in pixels", path);
                        return v->value;
                    };
                    canvas.width = dimension("width");
                    canvas.height = dimension("height");
                }
                else if (c->name == "region") {
                    regions.push_back(c);
                }
                else if (c->name == "regPoint") {
                    report_.warn("SkippedHeadElement", path, "skipped <regPoint>");
                }
                else if (kUnsupported.count(c->name) != 0) {
                    unsupported("<" + c->name + ">", path);
                }
                else {
                    schema_error("unknown element <" + c->name + "> in layout", path);
                }
            }
        }
        if (!haveRootLayout) {
            report_.warn("DefaultRootLayout", path, "no root-layout; using 640x480");
            canvas.width = 640;
            canvas.height = 480;
        }
        doc_.canvasWidth = canvas.width.px;
        doc_.canvasHeight = canvas.height.px;

        std::set<std::string> declared;
        for (const auto* r : regions)
            collect_region_ids(*r, declared);
        for (const auto& m : media_) {
            if (m.regionRef.empty())
                continue;
            if (declared.count(m.regionRef) == 0)
                report_.warn("UnknownRegion", "/smil/body",
                             "object '" + m.objectId + "' names undeclared region '" + m.regionRef
                                 + "'; using the default region");
            else
                usersByRegion_[m.regionRef].push_back(m.objectId);
        }

        for (const auto* r : regions)
            build_regions(*r, canvas, path, doc_.layout);

        // Objects without a usable region fill the canvas.
        for (const auto& m : media_) {
            if (regionByObject_.count(m.objectId) != 0)
                continue;
            RegionNode r;
            r.regionId = fresh_id(region_id_for(m.objectId));
            r.width = canvas.width;
            r.height = canvas.height;
            regionByObject_[m.objectId] = r.regionId;
            doc_.layout.push_back(std::move(r));
        }
    }

    void collect_region_ids(const xml::Node& n, std::set<std::string>& out)
    {
        if (auto id = element_id(n); !id.empty())
            out.insert(id);
        for (const auto* c : n.element_children()) {
            if (is_smil(*c) && c->name == "region")
                collect_region_ids(*c, out);
        }
    }

    std::string ns_;
    intermediate::IntermediateDocument doc_;
    ValidationReport report_;
    const xml::Node* layout_ = nullptr;
    std::set<std::string> usedIds_;
    std::vector<PendingMedia> media_;
    std::map<std::string, std::vector<std::string>> usersByRegion_;
    std::map<std::string, std::string> regionByObject_;
};

} // namespace

ImportResult import_smil(std::string_view bytes)
{
    return Importer().run(bytes);
}

} // namespace medex
