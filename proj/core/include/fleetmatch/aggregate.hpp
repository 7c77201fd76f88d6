// Copyright 2026 The fleetmatch Authors
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

#pragma once

#include <span>
#include <vector>

#include "fleetmatch/record.hpp"
#include "fleetmatch/similarity.hpp"

namespace fleetmatch {

/// Clusters the units of one source into plants: connected components of the
/// graph whose edges are blocked candidate pairs with posterior >= threshold
/// (single linkage). Every record lands in exactly one group; groups are
/// ordered by their smallest record index, members ascending.
std::vector<std::vector<std::size_t>> cluster_units(std::span<const UnitRecord> records,
                                                    const SimilarityConfig& cfg,
                                                    unsigned workers = 1);

/// Merges one cluster into a PlantRecord:
///   capacity   summed (exact)
///   name       most frequent, ties to the shortest then lexicographic
///   fuel/tech/set  same mode rule
///   position   arithmetic mean of the coordinates that exist
///   year       minimum of the years that exist
PlantRecord merge_group(std::span<const UnitRecord> records,
                        std::span<const std::size_t> member_indices);

/// Convenience overload merging a contiguous group.
PlantRecord merge_group(std::span<const UnitRecord> group);

/// cluster + merge for a whole source, deterministically ordered.
std::vector<PlantRecord> aggregate_source(std::span<const UnitRecord> records,
                                          const SimilarityConfig& cfg,
                                          unsigned workers = 1);

}  // namespace fleetmatch
