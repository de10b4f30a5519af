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

#include <algorithm>

namespace medex {

namespace {

using intermediate::RegionNode;
using intermediate::TimeNode;
using source::Length;
using source::ObjectKind;
using source::ObjectNode;

std::int64_t floor_div(std::int64_t num, std::int64_t den)
{
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0)))
        --q;
    return q;
}

// round(num / den) with halves rounded towards +infinity; den > 0.
std::int64_t round_half_up(std::int64_t num, std::int64_t den)
{
    return floor_div(2 * num + den, 2 * den);
}

std::int64_t resolve_extent(const Length& length, std::int64_t parentExtent)
{
    if (length.unit == Length::Unit::percent)
        return round_half_up(parentExtent * length.value, 100000);
    return length.value;
}

std::int64_t resolve_offset(const Length& length, std::int64_t parentExtent, std::int64_t ownExtent)
{
    if (length.unit == Length::Unit::center)
        return round_half_up(parentExtent - ownExtent, 2);
    return resolve_extent(length, parentExtent);
}

RegionNode resolve_region(const ObjectNode& obj, std::int64_t parentAbsLeft, std::int64_t parentAbsTop,
                          std::int64_t parentWidth, std::int64_t parentHeight)
{
    const source::SpatialSpec spec = obj.spatial.value_or(source::SpatialSpec{});

    RegionNode r;
    r.regionId = region_id_for(obj.id);
    std::int64_t width = resolve_extent(spec.width, parentWidth);
    std::int64_t height = resolve_extent(spec.height, parentHeight);
    std::int64_t left = resolve_offset(spec.left, parentWidth, width);
    std::int64_t top = resolve_offset(spec.top, parentHeight, height);
    r.width = width;
    r.height = height;
    r.relLeft = left;
    r.relTop = top;
    r.absLeft = parentAbsLeft + left;
    r.absTop = parentAbsTop + top;
    r.z = spec.z;
    for (const auto& c : obj.children)
        r.children.push_back(resolve_region(c, parentAbsLeft + left, parentAbsTop + top, width, height));
    return r;
}

Begin authored_begin(const ObjectNode& obj)
{
    if (const auto* offset = std::get_if<std::int64_t>(&obj.timing.begin))
        return Begin::at(*offset);
    return Begin::on_click(std::get<source::ClickTrigger>(obj.timing.begin).targetId);
}

std::int64_t authored_offset(const ObjectNode& obj)
{
    if (const auto* offset = std::get_if<std::int64_t>(&obj.timing.begin))
        return *offset;
    return 0;
}

bool any_indefinite(const std::vector<TimeNode>& children)
{
    return std::any_of(children.begin(), children.end(),
                       [](const TimeNode& c) { return c.dur.kind == Duration::Kind::indefinite; });
}

Duration implicit_duration(ObjectKind kind, const std::vector<TimeNode>& children)
{
    switch (kind) {
    case ObjectKind::excl:
        return Duration::indefinite();
    case ObjectKind::par: {
        // Last-end rule: the par ends when its last child ends.
        if (any_indefinite(children))
            return Duration::indefinite();
        std::int64_t end = 0;
        for (const auto& c : children) {
            if (!c.begin.is_static() || !c.dur.is_static())
                return Duration::unresolved();
            end = std::max(end, c.begin.ms + c.dur.ms);
        }
        return Duration::of(end);
    }
    case ObjectKind::seq: {
        if (any_indefinite(children))
            return Duration::indefinite();
        if (children.empty())
            return Duration::of(0);
        const auto& last = children.back();
        if (!last.begin.is_static() || !last.dur.is_static())
            return Duration::unresolved();
        return Duration::of(last.begin.ms + last.dur.ms);
    }
    case ObjectKind::media:
        break;
    }
    return Duration::unresolved();
}

TimeNode resolve_node(const ObjectNode& obj)
{
    TimeNode t;
    t.timeId = time_id_for(obj.id);
    t.begin = authored_begin(obj);

    if (obj.kind == ObjectKind::media) {
        t.kind = TimeNode::Kind::leaf;
        t.objectId = obj.id;
    }
    else {
        t.kind = obj.kind == ObjectKind::par ? TimeNode::Kind::par
               : obj.kind == ObjectKind::seq ? TimeNode::Kind::seq
                                             : TimeNode::Kind::excl;
        for (const auto& c : obj.children)
            t.children.push_back(resolve_node(c));
    }

    if (obj.kind == ObjectKind::seq) {
        // Accumulate begins; one non-static predecessor makes every later
        // begin unresolved.
        bool chainStatic = true;
        std::int64_t previousEnd = 0;
        for (std::size_t i = 0; i < t.children.size(); ++i) {
            auto& child = t.children[i];
            child.offset = authored_offset(obj.children[i]);
            if (chainStatic)
                child.begin = Begin::at(previousEnd + child.offset);
            else
                child.begin = Begin::unresolved();
            if (chainStatic && child.dur.is_static())
                previousEnd = child.begin.ms + child.dur.ms;
            else
                chainStatic = false;
        }
    }

    using DK = source::DurValue::Kind;
    switch (obj.timing.dur.kind) {
    case DK::fixed:
        t.dur = Duration::of(obj.timing.dur.ms);
        break;
    case DK::media:
        t.dur = Duration::media();
        break;
    case DK::indefinite:
        t.dur = Duration::indefinite();
        break;
    case DK::unspecified:
        if (obj.kind == ObjectKind::media)
            t.dur = obj.media && is_continuous(obj.media->type) ? Duration::media() : Duration::indefinite();
        else
            t.dur = implicit_duration(obj.kind, t.children);
        break;
    }
    return t;
}

void collect_media(const ObjectNode& obj, intermediate::IntermediateDocument& out)
{
    if (obj.kind == ObjectKind::media && obj.media) {
        out.references.push_back({obj.id, region_id_for(obj.id), time_id_for(obj.id)});
        intermediate::Asset asset;
        asset.objectId = obj.id;
        asset.type = obj.media->type;
        asset.src = obj.media->src;
        if (obj.media->type == MediaType::text)
            asset.text = intermediate::TextPayload{obj.media->textContent.value_or(""),
                                                   obj.media->textStyle.value_or(TextStyle{})};
        out.media.push_back(std::move(asset));
    }
    for (const auto& c : obj.children)
        collect_media(c, out);
}

} // namespace

intermediate::RegionNode resolve_spatial(const source::SourceDocument& doc)
{
    return resolve_region(doc.root, 0, 0, doc.canvasWidth, doc.canvasHeight);
}

intermediate::TimeNode resolve_timing(const source::SourceDocument& doc)
{
    return resolve_node(doc.root);
}

intermediate::TimeNode resolve_timing(const source::ObjectNode& root)
{
    return resolve_node(root);
}

intermediate::IntermediateDocument compile(const source::SourceDocument& doc)
{
    auto report = source::validate_source(doc);
    if (!report.ok()) {
        const auto& first = report.errors.front();
        throw Error(first.code, first.message, first.path);
    }

    intermediate::IntermediateDocument out;
    out.head.set("title", doc.title);
    out.head.set("generator", std::string(kGenerator));
    if (!doc.baseUri.empty())
        out.head.set("base", doc.baseUri);
    out.canvasWidth = doc.canvasWidth;
    out.canvasHeight = doc.canvasHeight;
    out.layout.push_back(resolve_spatial(doc));
    out.timing = resolve_timing(doc);
    collect_media(doc.root, out);
    return out;
}

} // namespace medex
