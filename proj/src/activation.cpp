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

#include "medex/activation.hpp"

#include <algorithm>
#include <sstream>

namespace medex {

namespace {

using intermediate::TimeNode;

bool fully_static(const TimeNode& node)
{
    if (!node.begin.is_static())
        return false;
    if (!node.dur.is_static() && node.dur.kind != Duration::Kind::indefinite)
        return false;
    return std::all_of(node.children.begin(), node.children.end(), fully_static);
}

void mark_inactive(const TimeNode& node, ActivationTable& table)
{
    table[object_id_of(node)];
    for (const auto& c : node.children)
        mark_inactive(c, table);
}

void derive(const TimeNode& node, std::int64_t parentStart, std::int64_t limit, ActivationTable& table)
{
    std::int64_t start = parentStart + node.begin.ms;
    std::int64_t end = node.dur.is_static() ? start + node.dur.ms : kOpenEnd;
    end = std::min(end, limit);
    if (start >= end) {
        mark_inactive(node, table);
        return;
    }
    table[object_id_of(node)].push_back({start, end});

    for (std::size_t i = 0; i < node.children.size(); ++i) {
        std::int64_t childLimit = end;
        if (node.kind == TimeNode::Kind::excl) {
            // A later activation (or a tie later in document order) stops this child.
            const auto& mine = node.children[i];
            for (std::size_t j = 0; j < node.children.size(); ++j) {
                const auto& other = node.children[j];
                if (j == i)
                    continue;
                if (other.begin.ms > mine.begin.ms || (other.begin.ms == mine.begin.ms && j > i))
                    childLimit = std::min(childLimit, start + other.begin.ms);
            }
        }
        derive(node.children[i], start, childLimit, table);
    }
}

} // namespace

std::string object_id_of(const intermediate::TimeNode& node)
{
    if (node.is_leaf())
        return node.objectId;
    if (node.timeId.starts_with("t-"))
        return node.timeId.substr(2);
    return node.timeId;
}

std::optional<ActivationTable> derive_activation(const intermediate::TimeNode& root)
{
    if (!fully_static(root))
        return std::nullopt;
    ActivationTable table;
    derive(root, 0, kOpenEnd, table);
    return table;
}

std::string to_string(const ActivationTable& table)
{
    std::ostringstream out;
    for (const auto& [id, intervals] : table) {
        out << id << ":";
        for (const auto& iv : intervals) {
            out << " [" << iv.begin << ", ";
            if (iv.end == kOpenEnd)
                out << "open";
            else
                out << iv.end;
            out << ")";
        }
        out << "\n";
    }
    return out.str();
}

} // namespace medex
