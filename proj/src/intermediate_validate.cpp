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

#include <map>
#include <set>

namespace medex::intermediate {

namespace {

struct Validator {
    const IntermediateDocument& doc;
    ValidationReport report;

    std::map<std::string, int> xmlIds;
    std::map<std::string, const RegionNode*> regions;
    std::map<std::string, const TimeNode*> timeNodes;
    std::map<std::string, const Asset*> assets;
    std::set<std::string> leafObjectIds;

    void index_region(const RegionNode& r)
    {
        ++xmlIds[r.regionId];
        regions.emplace(r.regionId, &r);
        for (const auto& c : r.children)
            index_region(c);
    }

    void index_time(const TimeNode& t)
    {
        ++xmlIds[t.timeId];
        timeNodes.emplace(t.timeId, &t);
        if (t.is_leaf())
            leafObjectIds.insert(t.objectId);
        for (const auto& c : t.children)
            index_time(c);
    }

    void check_id(const std::string& id, const std::string& path)
    {
        if (!xml::is_xml_name(id))
            report.error("InvalidId", path, "'" + id + "' is not a valid XML name");
        auto it = xmlIds.find(id);
        if (it != xmlIds.end() && it->second > 1) {
            report.error("DuplicateId", path, "xml:id '" + id + "' is used more than once");
            it->second = 0; // report once
        }
    }

    void check_pixel(const PixelValue& v, std::string_view attr, const std::string& path)
    {
        if (!v.resolved())
            report.error("UnresolvedSpatialValue", path + "@" + std::string(attr),
                         "non-pixel value '" + v.unresolved + "'");
    }

    void check_region(const RegionNode& r, std::int64_t parentAbsLeft, std::int64_t parentAbsTop,
                      const std::string& parentPath)
    {
        std::string path = parentPath + "/region[@xml:id='" + r.regionId + "']";
        check_id(r.regionId, path);
        check_pixel(r.relLeft, "left", path);
        check_pixel(r.relTop, "top", path);
        check_pixel(r.width, "width", path);
        check_pixel(r.height, "height", path);
        check_pixel(r.absLeft, "absLeft", path);
        check_pixel(r.absTop, "absTop", path);

        if (r.width.resolved() && r.width.px < 0)
            report.error("NegativeExtent", path + "@width", "negative width");
        if (r.height.resolved() && r.height.px < 0)
            report.error("NegativeExtent", path + "@height", "negative height");
        if (r.relLeft.resolved() && r.absLeft.resolved() && r.absLeft.px != parentAbsLeft + r.relLeft.px)
            report.error("AbsRelMismatch", path + "@absLeft", "absLeft is not parent absLeft + left");
        if (r.relTop.resolved() && r.absTop.resolved() && r.absTop.px != parentAbsTop + r.relTop.px)
            report.error("AbsRelMismatch", path + "@absTop", "absTop is not parent absTop + top");

        for (const auto& c : r.children)
            check_region(c, r.absLeft.px, r.absTop.px, path);
    }

    bool click_target_exists(const std::string& target) const
    {
        // Media objects are named by leaves; containers by the `t-<objectId>` convention.
        return leafObjectIds.count(target) != 0 || timeNodes.count("t-" + target) != 0;
    }

    void check_time(const TimeNode& t, const TimeNode* parent, const std::string& parentPath)
    {
        std::string path = parentPath + "/" + std::string(to_string(t.kind)) + "[@xml:id='" + t.timeId + "']";
        check_id(t.timeId, path);

        if (t.is_leaf()) {
            if (!t.children.empty())
                report.error("LeafWithChildren", path, "media leaf has children");
            if (t.objectId.empty())
                report.error("MissingObjectId", path, "media leaf without objectId");
        }
        else if (!t.objectId.empty()) {
            report.error("ContainerWithObjectId", path, "time container carries an objectId");
        }

        if (t.begin.is_static() && t.begin.ms < 0)
            report.error("NegativeTime", path + "@begin", "negative begin");
        if (t.dur.is_static() && t.dur.ms < 0)
            report.error("NegativeTime", path + "@dur", "negative dur");
        if (t.offset < 0)
            report.error("NegativeTime", path + "@offset", "negative offset");

        bool inSeq = parent != nullptr && parent->kind == TimeNode::Kind::seq;
        if (t.offset != 0 && !inSeq)
            report.error("OffsetOutsideSeq", path + "@offset", "offset is only meaningful for children of a seq");

        if (t.begin.kind == Begin::Kind::event) {
            if (inSeq)
                report.error("EventBeginInSeq", path + "@begin", "children of a seq cannot begin on an event");
            if (!click_target_exists(t.begin.clickTarget))
                report.error("DanglingClickTarget", path + "@begin",
                             "click target '" + t.begin.clickTarget + "' does not exist");
        }

        if (t.dur.kind == Duration::Kind::media) {
            if (!t.is_leaf()) {
                report.error("MediaDurOnContainer", path + "@dur", "dur=media on a time container");
            }
            else if (auto it = assets.find(t.objectId); it != assets.end() && !is_continuous(it->second->type)) {
                report.error("MediaDurOnStaticMedia", path + "@dur",
                             "dur=media on " + std::string(to_string(it->second->type)) + " media");
            }
        }

        if (t.kind == TimeNode::Kind::seq)
            check_seq_begins(t, path);

        for (const auto& c : t.children)
            check_time(c, &t, path);
    }

    // Redundant seq begins must agree with the predecessor's end plus the
    // child's own delay, and must stay unresolved once the chain breaks.
    void check_seq_begins(const TimeNode& seq, const std::string& path)
    {
        bool chainStatic = true;
        std::int64_t previousEnd = 0;
        for (const auto& c : seq.children) {
            std::string childPath = path + "/" + std::string(to_string(c.kind)) + "[@xml:id='" + c.timeId + "']";
            if (c.begin.is_static()) {
                if (!chainStatic) {
                    report.error("UnresolvedPropagation", childPath + "@begin",
                                 "static begin after an unresolved predecessor");
                }
                else if (c.begin.ms != previousEnd + c.offset) {
                    report.error("SeqOrderViolation", childPath + "@begin",
                                 "begin " + std::to_string(c.begin.ms) + " does not follow predecessor end "
                                     + std::to_string(previousEnd) + " + offset " + std::to_string(c.offset));
                }
            }
            if (c.begin.is_static() && c.dur.is_static() && chainStatic)
                previousEnd = c.begin.ms + c.dur.ms;
            else
                chainStatic = false;
        }
    }

    void run()
    {
        if (doc.head.find("title") == nullptr)
            report.error("MissingMeta", "/document/head", "head has no 'title' entry");
        if (doc.head.find("generator") == nullptr)
            report.error("MissingMeta", "/document/head", "head has no 'generator' entry");
        if (doc.canvasWidth <= 0 || doc.canvasHeight <= 0)
            report.error("InvalidCanvas", "/document/layout", "canvas dimensions must be positive");

        for (const auto& r : doc.layout)
            index_region(r);
        index_time(doc.timing);
        for (const auto& a : doc.media) {
            if (!assets.emplace(a.objectId, &a).second)
                report.error("DuplicateAsset", "/document/media/asset[@objectId='" + a.objectId + "']",
                             "more than one asset for object '" + a.objectId + "'");
        }

        for (const auto& r : doc.layout)
            check_region(r, 0, 0, "/document/layout");
        check_time(doc.timing, nullptr, "/document/timing");

        for (const auto& a : doc.media) {
            std::string path = "/document/media/asset[@objectId='" + a.objectId + "']";
            bool isText = a.type == MediaType::text;
            if (isText != a.text.has_value() || isText == a.src.has_value())
                report.error("AssetPayloadMismatch", path,
                             isText ? "text asset must carry a text payload and no src"
                                    : "non-text asset must carry a src and no text payload");
            if (a.text && a.text->style.fontSizePx <= 0)
                report.error("InvalidFontSize", path, "font size must be positive");
        }

        std::map<std::string, int> regionUse;
        std::map<std::string, int> timeUse;
        std::map<std::string, int> objectUse;
        for (const auto& ref : doc.references) {
            std::string path = "/document/references/ref[@objectId='" + ref.objectId + "']";
            if (assets.count(ref.objectId) == 0)
                report.error("DanglingObjectRef", path, "object '" + ref.objectId + "' has no asset");
            if (regions.count(ref.regionId) == 0)
                report.error("DanglingRegionRef", path, "region '" + ref.regionId + "' does not exist");
            if (auto it = timeNodes.find(ref.timeId); it == timeNodes.end()) {
                report.error("DanglingTimeRef", path, "time node '" + ref.timeId + "' does not exist");
            }
            else if (!it->second->is_leaf()) {
                report.error("RefToContainer", path, "time node '" + ref.timeId + "' is not a media leaf");
            }
            else if (it->second->objectId != ref.objectId) {
                report.error("LeafObjectMismatch", path,
                             "time node '" + ref.timeId + "' belongs to object '" + it->second->objectId + "'");
            }
            if (++regionUse[ref.regionId] == 2)
                report.error("RegionReuse", path, "region '" + ref.regionId + "' is referenced more than once");
            if (++timeUse[ref.timeId] == 2)
                report.error("TimeNodeReuse", path, "time node '" + ref.timeId + "' is referenced more than once");
            if (++objectUse[ref.objectId] == 2)
                report.error("MultiplyReferencedAsset", path,
                             "object '" + ref.objectId + "' is referenced more than once");
        }
        for (const auto& a : doc.media) {
            if (objectUse.count(a.objectId) == 0)
                report.error("UnreferencedAsset", "/document/media/asset[@objectId='" + a.objectId + "']",
                             "asset is not referenced");
        }
        for (const auto& [id, node] : timeNodes) {
            if (node->is_leaf() && timeUse.count(id) == 0)
                report.error("UnreferencedLeaf", "/document/timing", "media leaf '" + id + "' is not referenced");
        }
    }
};

} // namespace

ValidationReport validate_intermediate(const IntermediateDocument& doc)
{
    Validator v{doc, {}, {}, {}, {}, {}, {}};
    v.run();
    return std::move(v.report);
}

} // namespace medex::intermediate
