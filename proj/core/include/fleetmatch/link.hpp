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

/// Links each plant of A to its best counterpart in B with posterior >=
/// threshold, one-to-one per dataset pair. Links are selected greedily in
/// descending posterior; ties prefer the pair with the larger combined
/// capacity, then the lexicographically smaller names.
std::vector<DatasetLink> match_dataset_pair(std::span<const PlantRecord> a,
                                            std::span<const PlantRecord> b,
                                            const SimilarityConfig& cfg,
                                            unsigned workers = 1);

/// Joins pairwise links into chains: connected components over plants. While
/// a component holds two plants of one source, the lowest-posterior link on
/// the path between them is removed and components are recomputed. Chains
/// that end up spanning a single source are dropped, so every returned chain
/// has >= 2 members and at most one plant per source.
std::vector<LinkChain> join_chains(std::span<const DatasetLink> links);

}  // namespace fleetmatch
