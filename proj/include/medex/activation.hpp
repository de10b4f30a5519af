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

#ifndef MEDEX_ACTIVATION_HPP
#define MEDEX_ACTIVATION_HPP

#include "medex/intermediate.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace medex {

/// End marker for an activation that never finishes on its own.
inline constexpr std::int64_t kOpenEnd = std::numeric_limits<std::int64_t>::max();

/// Half-open activation interval [begin, end) in document milliseconds.
struct Interval {
    std::int64_t begin = 0;
    std::int64_t end = 0;

    bool operator==(const Interval&) const = default;
};

/// objectId -> sorted, disjoint activation intervals. Objects that are never
/// presented map to an empty list.
using ActivationTable = std::map<std::string, std::vector<Interval>>;

std::string to_string(const ActivationTable& table);

/// Object id a time node stands for: the leaf's objectId, or the container's
/// time id without its `t-` prefix.
std::string object_id_of(const intermediate::TimeNode& node);

/// Absolute intervals implied by a resolved timing tree, computed
/// algebraically: begin offsets accumulate down the tree, ends are clipped by
/// the parent's end and, inside an excl, by the next sibling to activate.
/// Returns nullopt unless every begin is static and every duration is static
/// or indefinite.
std::optional<ActivationTable> derive_activation(const intermediate::TimeNode& root);

} // namespace medex

#endif // MEDEX_ACTIVATION_HPP
