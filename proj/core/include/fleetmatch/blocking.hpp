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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fleetmatch/record.hpp"

namespace fleetmatch {

/// An index pair (i < j) into the record list handed to block().
using CandidatePair = std::pair<std::uint32_t, std::uint32_t>;

/// Candidate pair generation. Two records become a candidate when they share
/// any blocking key; every key embeds the country, so cross-country pairs are
/// never emitted. Keys per record:
///   - (country, fueltype)
///   - (country, full canonical name)
///   - (country, token) for every name token
///   - (country, first four bytes of each token of length >= 4)
///
/// The key set is deliberately generous: a candidate that scores below the
/// threshold costs one comparison, a missed pair breaks the clustering
/// oracle. Pairs come back sorted and unique.
std::vector<CandidatePair> block(std::span<const UnitRecord> records);
std::vector<CandidatePair> block(std::span<const PlantRecord> records);

/// Cross-list variant for dataset pair matching: candidates (i, j) with i
/// indexing `left` and j indexing `right`, same key scheme.
std::vector<CandidatePair> block_across(std::span<const PlantRecord> left,
                                        std::span<const PlantRecord> right);

}  // namespace fleetmatch
