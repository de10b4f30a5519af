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

#include "medex/timeline_oracle.hpp"

#include "medex/error.hpp"

#include <algorithm>

namespace medex {

namespace {

using source::ObjectKind;
using source::ObjectNode;

enum class Phase { idle, active, done };

struct SimNode {
    const ObjectNode* object = nullptr;
    int parent = -1;
    std::vector<int> children;
    int indexInParent = 0;

    // Duration that ends the node by itself; absent means it only ends
    // through its children (par/seq) or never (excl, indefinite media).
    std::optional<std::int64_t> ownDuration;
    bool endsWithChildren = false;

    Phase phase = Phase::idle;
    std::int64_t start = 0;
    std::int64_t doneAt = 0;
    std::vector<Interval> intervals;
};

class Simulation {
public:
    Simulation(const source::SourceDocument& doc, const std::vector<ClickEvent>& events,
               const OracleOptions& options)
        : events_(events), options_(options)
    {
        add(doc.root, -1, 0);
    }

    ActivationTable run()
    {
        std::int64_t horizon = options_.horizonMs.value_or(default_horizon());
        for (std::int64_t t = 0; t <= horizon; ++t) {
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t i = 0; i < nodes_.size(); ++i)
                    changed |= step(static_cast<int>(i), t);
            }
            if (nodes_[0].phase == Phase::done)
                break;
        }

        ActivationTable table;
        for (const auto& n : nodes_) {
            auto& list = table[n.object->id];
            list = n.intervals;
            if (n.phase == Phase::active)
                list.push_back({n.start, kOpenEnd});
        }
        return table;
    }

private:
    int add(const ObjectNode& obj, int parent, int indexInParent)
    {
        int id = static_cast<int>(nodes_.size());
        nodes_.emplace_back();
        {
            auto& n = nodes_.back();
            n.object = &obj;
            n.parent = parent;
            n.indexInParent = indexInParent;
            const auto& dur = obj.timing.dur;
            using DK = source::DurValue::Kind;
            if (dur.kind == DK::fixed) {
                n.ownDuration = dur.ms;
            }
            else if (obj.kind == ObjectKind::media) {
                bool intrinsic = dur.kind == DK::media
                              || (dur.kind == DK::unspecified && obj.media && is_continuous(obj.media->type));
                if (intrinsic) {
                    auto it = options_.mediaDurations.find(obj.id);
                    if (it == options_.mediaDurations.end())
                        throw Error("MissingFixture", "no fixture duration for media object '" + obj.id + "'");
                    n.ownDuration = it->second;
                }
            }
            else if (dur.kind == DK::unspecified) {
                n.endsWithChildren = obj.kind == ObjectKind::par || obj.kind == ObjectKind::seq;
            }
        }
        for (std::size_t i = 0; i < obj.children.size(); ++i) {
            int child = add(obj.children[i], id, static_cast<int>(i));
            nodes_[static_cast<std::size_t>(id)].children.push_back(child);
        }
        return id;
    }

    std::int64_t default_horizon() const
    {
        // No transition can happen after the last click plus the sum of
        // every authored delay and duration.
        std::int64_t total = 1;
        for (const auto& n : nodes_) {
            if (const auto* offset = std::get_if<std::int64_t>(&n.object->timing.begin))
                total += *offset;
            if (n.ownDuration)
                total += *n.ownDuration;
        }
        std::int64_t lastEvent = 0;
        for (const auto& e : events_)
            lastEvent = std::max(lastEvent, e.atMs);
        return total + lastEvent;
    }

    SimNode& node(int i) { return nodes_[static_cast<std::size_t>(i)]; }

    bool clicked(const std::string& target, std::int64_t t) const
    {
        return std::any_of(events_.begin(), events_.end(),
                           [&](const ClickEvent& e) { return e.atMs == t && e.targetId == target; });
    }

    void finish(int i, std::int64_t t)
    {
        auto& n = node(i);
        if (n.phase == Phase::active) {
            if (t > n.start)
                n.intervals.push_back({n.start, t});
            n.phase = Phase::done;
            n.doneAt = t;
        }
        else if (n.phase == Phase::idle) {
            n.phase = Phase::done;
            n.doneAt = t;
        }
        for (int c : n.children) {
            if (node(c).phase != Phase::done)
                finish(c, t);
        }
    }

    void activate(int i, std::int64_t t)
    {
        auto& n = node(i);
        if (n.parent >= 0 && node(n.parent).object->kind == ObjectKind::excl) {
            for (int sibling : node(n.parent).children) {
                if (sibling != i && node(sibling).phase == Phase::active)
                    finish(sibling, t);
            }
        }
        n.phase = Phase::active;
        n.start = t;
    }

    bool ready_to_begin(int i, std::int64_t t)
    {
        auto& n = node(i);
        const auto& begin = n.object->timing.begin;
        if (const auto* click = std::get_if<source::ClickTrigger>(&begin))
            return clicked(click->targetId, t);
        std::int64_t offset = std::get<std::int64_t>(begin);
        if (n.parent < 0)
            return t == offset;
        auto& parent = node(n.parent);
        if (parent.object->kind != ObjectKind::seq || n.indexInParent == 0)
            return t == parent.start + offset;
        auto& previous = node(parent.children[static_cast<std::size_t>(n.indexInParent - 1)]);
        return previous.phase == Phase::done && t == previous.doneAt + offset;
    }

    bool step(int i, std::int64_t t)
    {
        auto& n = node(i);
        if (n.phase == Phase::active) {
            bool end = false;
            if (n.ownDuration && t >= n.start + *n.ownDuration)
                end = true;
            else if (n.endsWithChildren)
                end = std::all_of(n.children.begin(), n.children.end(),
                                  [&](int c) { return node(c).phase == Phase::done; });
            if (end) {
                finish(i, t);
                return true;
            }
            return false;
        }
        if (n.phase == Phase::idle) {
            bool parentActive = n.parent < 0 || node(n.parent).phase == Phase::active;
            if (parentActive && ready_to_begin(i, t)) {
                activate(i, t);
                return true;
            }
        }
        return false;
    }

    const std::vector<ClickEvent>& events_;
    const OracleOptions& options_;
    std::vector<SimNode> nodes_;
};

} // namespace

ActivationTable timeline_oracle(const source::SourceDocument& doc, const std::vector<ClickEvent>& events,
                                const OracleOptions& options)
{
    return Simulation(doc, events, options).run();
}

} // namespace medex
