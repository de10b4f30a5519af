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

#ifndef MEDEX_RESOLVER_HPP
#define MEDEX_RESOLVER_HPP

#include "medex/intermediate.hpp"
#include "medex/source.hpp"

#include <string>
#include <string_view>

namespace medex {

inline constexpr std::string_view kGenerator = "medex";

inline std::string region_id_for(std::string_view objectId)
{
    return "r-" + std::string(objectId);
}

inline std::string time_id_for(std::string_view objectId)
{
    return "t-" + std::string(objectId);
}

/// Region tree mirroring the object hierarchy, in integer pixels.
/// Percentages resolve against the parent box and `center` to
/// (parent - own) / 2, both rounded half-up. Objects without a spatial spec
/// fill their parent. Precondition: the document validates.
intermediate::RegionNode resolve_spatial(const source::SourceDocument& doc);

/// Normalized par/seq/excl/leaf tree with every statically computable
/// begin and duration filled in. Begins are relative to the parent's start;
/// seq children carry their accumulated begin even though it is derivable.
intermediate::TimeNode resolve_timing(const source::SourceDocument& doc);
intermediate::TimeNode resolve_timing(const source::ObjectNode& root);

/// Full source-to-intermediate compilation. Throws medex::Error with the
/// code of the first source validation error when the precondition fails.
intermediate::IntermediateDocument compile(const source::SourceDocument& doc);

} // namespace medex

#endif // MEDEX_RESOLVER_HPP
