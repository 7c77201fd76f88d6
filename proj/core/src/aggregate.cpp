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

#include "fleetmatch/aggregate.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

#include "fleetmatch/blocking.hpp"
#include "fleetmatch/parallel.hpp"
#include "mode.hpp"

namespace fleetmatch {
namespace {

using detail::mode_value;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    std::size_t ra = find(a);
    std::size_t rb = find(b);
    if (ra == rb) return;
    // Smaller root wins so component labels do not depend on edge order.
    if (ra < rb) {
      parent_[rb] = ra;
    } else {
      parent_[ra] = rb;
    }
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::vector<std::vector<std::size_t>> cluster_units(std::span<const UnitRecord> records,
                                                    const SimilarityConfig& cfg,
                                                    unsigned workers) {
  const std::vector<CandidatePair> candidates = block(records);
  std::vector<double> posteriors(candidates.size());
  parallel_for(candidates.size(), workers, [&](std::size_t i) {
    const auto& [a, b] = candidates[i];
    posteriors[i] = record_similarity(records[a], records[b], cfg);
  });

  UnionFind components(records.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (posteriors[i] >= cfg.threshold) {
      components.unite(candidates[i].first, candidates[i].second);
    }
  }

  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < records.size(); ++i) {
    by_root[components.find(i)].push_back(i);
  }
  std::vector<std::vector<std::size_t>> groups;
  groups.reserve(by_root.size());
  for (auto& [root, members] : by_root) {
    groups.push_back(std::move(members));
  }
  return groups;
}

PlantRecord merge_group(std::span<const UnitRecord> records,
                        std::span<const std::size_t> member_indices) {
  if (member_indices.empty()) {
    throw std::invalid_argument("merge_group: empty group");
  }

  std::vector<std::string> names;
  std::vector<FuelType> fuels;
  std::vector<Technology> techs;
  std::vector<SetType> sets;
  names.reserve(member_indices.size());

  PlantRecord plant;
  const UnitRecord& first = records[member_indices[0]];
  plant.source_id = first.source_id;
  plant.country = first.country;

  double lat_sum = 0.0, lon_sum = 0.0;
  std::size_t n_coords = 0;
  for (std::size_t idx : member_indices) {
    const UnitRecord& unit = records[idx];
    assert(unit.source_id == plant.source_id);
    assert(unit.country == plant.country);
    names.push_back(unit.name);
    fuels.push_back(unit.fueltype);
    techs.push_back(unit.technology);
    sets.push_back(unit.set);
    plant.capacity_mw += unit.capacity_mw;
    if (unit.position) {
      lat_sum += unit.position->lat;
      lon_sum += unit.position->lon;
      ++n_coords;
    }
    if (unit.year_commissioned) {
      plant.year_commissioned =
          plant.year_commissioned
              ? std::min(*plant.year_commissioned, *unit.year_commissioned)
              : *unit.year_commissioned;
    }
    plant.member_project_ids.push_back(unit.project_id);
  }

  plant.name = mode_value(names, [](const std::string& s) -> const std::string& { return s; });
  plant.fueltype = mode_value(fuels, [](FuelType f) { return to_string(f); });
  plant.technology = mode_value(techs, [](Technology t) { return to_string(t); });
  plant.set = mode_value(sets, [](SetType s) { return to_string(s); });
  if (n_coords > 0) {
    plant.position = GeoPoint{lat_sum / static_cast<double>(n_coords),
                              lon_sum / static_cast<double>(n_coords)};
  }
  std::sort(plant.member_project_ids.begin(), plant.member_project_ids.end());

  // The mode name belongs to some member; reuse its cached key.
  for (std::size_t idx : member_indices) {
    if (records[idx].name == plant.name) {
      plant.name_key = records[idx].name_key;
      break;
    }
  }
  return plant;
}

PlantRecord merge_group(std::span<const UnitRecord> group) {
  std::vector<std::size_t> indices(group.size());
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  return merge_group(group, indices);
}

std::vector<PlantRecord> aggregate_source(std::span<const UnitRecord> records,
                                          const SimilarityConfig& cfg,
                                          unsigned workers) {
  std::vector<PlantRecord> plants;
  for (const std::vector<std::size_t>& group : cluster_units(records, cfg, workers)) {
    plants.push_back(merge_group(records, group));
  }
  return plants;
}

}  // namespace fleetmatch
