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

#include <map>
#include <string>
#include <vector>

#include "fleetmatch/record.hpp"

namespace fleetmatch {

using ReliabilityScores = std::map<std::string, int>;

/// Collapses one chain into a single claim.
///
/// A unique highest-score member wins outright and its claim is copied
/// wholesale. When several members share the highest score, fields reduce
/// per the tie rules: name/fuel/technology/set by mode (ties to the shortest
/// then lexicographic), position by the mean of present coordinates,
/// capacity by the median of the tied capacities, year by the minimum
/// present year. A missing year or Unknown technology is backfilled from the
/// highest-score member that provides one. Provenance always unions all
/// members.
///
/// Throws when a member source has no reliability score.
MatchedRecord reduce_chain(const LinkChain& chain, const PlantsBySource& plants,
                           const ReliabilityScores& scores);

/// Reduces every chain and sorts the result by (country, name) for
/// deterministic output.
std::vector<MatchedRecord> reduce_all(const std::vector<LinkChain>& chains,
                                      const PlantsBySource& plants,
                                      const ReliabilityScores& scores);

}  // namespace fleetmatch
