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

#include "medex/smil_backend.hpp"

#include "medex/activation.hpp"
#include "medex/clock_value.hpp"

#include <set>

namespace medex {

namespace {

using intermediate::IntermediateDocument;
using intermediate::RegionNode;
using intermediate::TimeNode;

const std::string kNs(kSmil21Namespace);
const std::string kXmlNs(xml::kXmlNamespace);

xml::Node element(std::string name)
{
    return xml::Node::element(kNs, std::move(name));
}

xml::Node smil_region(const RegionNode& r)
{
    auto n = element("region");
    n.set_attr(kXmlNs, "id", r.regionId);
    n.set_attr("left", std::to_string(r.relLeft.px));
    n.set_attr("top", std::to_string(r.relTop.px));
    n.set_attr("width", std::to_string(r.width.px));
    n.set_attr("height", std::to_string(r.height.px));
    n.set_attr("z-index", std::to_string(r.z));
    for (const auto& c : r.children)
        n.append(smil_region(c));
    return n;
}

class SmilWriter {
public:
    SmilWriter(const IntermediateDocument& doc, const AssetPlan& plan) : doc_(doc), plan_(plan) {}

    xml::Node time_element(const TimeNode& t, const TimeNode* parent)
    {
        xml::Node n;
        if (t.is_leaf()) {
            const auto* asset = intermediate::find_asset(doc_, t.objectId);
            const auto* ref = intermediate::find_reference(doc_, t.objectId);
            switch (asset->type) {
            case MediaType::audio: n = element("audio"); break;
            case MediaType::video: n = element("video"); break;
            default: n = element("img"); break; // image, and text as rasterized PNG
            }
            n.set_attr("region", ref->regionId);
            n.set_attr("src", plan_.pathByObject.at(t.objectId));
        }
        else {
            n = element(std::string(intermediate::to_string(t.kind)));
        }
        n.set_attr(kXmlNs, "id", element_id_for(t));

        bool inSeq = parent != nullptr && parent->kind == TimeNode::Kind::seq;
        if (inSeq) {
            // SMIL seq children begin relative to the previous sibling's end.
            if (t.offset != 0)
                n.set_attr("begin", format_ms(t.offset));
        }
        else if (t.begin.kind == Begin::Kind::static_offset) {
            n.set_attr("begin", format_ms(t.begin.ms));
        }
        else if (t.begin.kind == Begin::Kind::event) {
            n.set_attr("begin", t.begin.clickTarget + ".activateEvent");
        }

        if (t.dur.kind == Duration::Kind::static_ms)
            n.set_attr("dur", format_ms(t.dur.ms));
        else if (t.dur.kind == Duration::Kind::indefinite)
            n.set_attr("dur", "indefinite");

        for (const auto& c : t.children)
            n.append(time_element(c, &t));
        return n;
    }

private:
    const IntermediateDocument& doc_;
    const AssetPlan& plan_;
};

void collect_element_ids(const TimeNode& t, std::vector<std::string>& out)
{
    out.push_back(element_id_for(t));
    for (const auto& c : t.children)
        collect_element_ids(c, out);
}

void collect_region_ids(const RegionNode& r, std::vector<std::string>& out)
{
    out.push_back(r.regionId);
    for (const auto& c : r.children)
        collect_region_ids(c, out);
}

} // namespace

std::string element_id_for(const intermediate::TimeNode& node)
{
    return object_id_of(node);
}

SmilBundle emit_smil(const IntermediateDocument& doc, const Rasterizer& rasterizer, const ExportOptions& options)
{
    auto report = intermediate::validate_intermediate(doc);
    if (!report.ok()) {
        const auto& first = report.errors.front();
        throw Error("InvariantViolation", first.code + ": " + first.message, first.path);
    }

    std::vector<std::string> ids;
    for (const auto& r : doc.layout)
        collect_region_ids(r, ids);
    collect_element_ids(doc.timing, ids);
    std::set<std::string> seen;
    for (const auto& id : ids) {
        if (!seen.insert(id).second)
            throw Error("InvariantViolation", "id '" + id + "' would be declared twice in the SMIL document");
    }

    SmilBundle bundle;
    AssetPlan plan = plan_assets(doc, true, options);

    for (const auto& a : doc.media) {
        if (a.type != MediaType::text)
            continue;
        const auto* ref = intermediate::find_reference(doc, a.objectId);
        const auto* region = intermediate::find_region(doc, ref->regionId);
        ManifestEntry entry;
        entry.path = plan.pathByObject.at(a.objectId);
        entry.kind = ManifestEntry::Kind::generated_png;
        entry.sourceObjectId = a.objectId;
        try {
            entry.contents = rasterizer.raster(*a.text, region->width.px, region->height.px);
        }
        catch (const Error& e) {
            throw Error("RasterizeError", "text object '" + a.objectId + "': " + e.code() + ": " + e.what());
        }
        catch (const std::exception& e) {
            throw Error("RasterizeError", "text object '" + a.objectId + "': " + e.what());
        }
        bundle.manifest.push_back(std::move(entry));
    }
    for (auto& copy : plan.copies)
        bundle.manifest.push_back(copy);

    auto root = element("smil");
    auto& head = root.append(element("head"));
    for (std::string_view name : {"title", "generator"}) {
        if (const auto* value = doc.head.find(name)) {
            auto meta = element("meta");
            meta.set_attr("name", std::string(name));
            meta.set_attr("content", *value);
            head.append(std::move(meta));
        }
    }
    auto& layout = head.append(element("layout"));
    auto rootLayout = element("root-layout");
    rootLayout.set_attr("width", std::to_string(doc.canvasWidth));
    rootLayout.set_attr("height", std::to_string(doc.canvasHeight));
    layout.append(std::move(rootLayout));
    for (const auto& r : doc.layout)
        layout.append(smil_region(r));

    auto& body = root.append(element("body"));
    if (!doc.media.empty())
        body.append(SmilWriter(doc, plan).time_element(doc.timing, nullptr));

    bundle.documentBytes = xml::write(root);
    return bundle;
}

} // namespace medex
