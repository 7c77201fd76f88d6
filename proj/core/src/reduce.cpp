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

#include "fleetmatch/reduce.hpp"

#include <algorithm>
#include <stdexcept>

#include "mode.hpp"

namespace fleetmatch {
namespace {

struct Member {
  const PlantRecord* plant;
  int score;
};

Decimal median_capacity(std::vector<Decimal> values) {
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return Decimal::midpoint(values[n / 2 - 1], values[n / 2]);
}

}  // namespace

MatchedRecord reduce_chain(const LinkChain& chain, const PlantsBySource& plants,
                           const ReliabilityScores& scores) {
  if (chain.members.empty()) {
    throw std::invalid_argument("reduce_chain: empty chain");
  }

  // Resolve members and their scores; order is (score desc, source asc),
  // which is also the backfill provider order.
  std::vector<Member> members;
  for (const auto& [source_id, plant_index] : chain.members) {
    auto score_it = scores.find(source_id);
    if (score_it == scores.end()) {
      throw std::runtime_error("reduce: no reliability score configured for source '" +
                               source_id + "'");
    }
    auto plants_it = plants.find(source_id);
    if (plants_it == plants.end() || plant_index >= plants_it->second.size()) {
      throw std::runtime_error("reduce: chain references unknown plant in source '" +
                               source_id + "'");
    }
    members.push_back({&plants_it->second[plant_index], score_it->second});
  }
  std::stable_sort(members.begin(), members.end(), [](const Member& a, const Member& b) {
    return a.score > b.score;  // chain.members is already source-sorted
  });

  const int top_score = members.front().score;
  std::vector<const PlantRecord*> tied;
  for (const Member& m : members) {
    if (m.score == top_score) tied.push_back(m.plant);
  }

  MatchedRecord out;
  out.country = members.front().plant->country;

  if (tied.size() == 1) {
    const PlantRecord& winner = *tied.front();
    out.name = winner.name;
    out.fueltype = winner.fueltype;
    out.technology = winner.technology;
    out.set = winner.set;
    out.capacity_mw = winner.capacity_mw;
    out.year_commissioned = winner.year_commissioned;
    out.position = winner.position;
    out.winning_source = winner.source_id;
  } else {
    std::vector<std::string> names;
    std::vector<FuelType> fuels;
    std::vector<Technology> techs;
    std::vector<SetType> sets;
    std::vector<Decimal> capacities;
    double lat_sum = 0.0, lon_sum = 0.0;
    std::size_t n_coords = 0;
    std::optional<int> min_year;
    for (const PlantRecord* plant : tied) {
      names.push_back(plant->name);
      fuels.push_back(plant->fueltype);
      techs.push_back(plant->technology);
      sets.push_back(plant->set);
      capacities.push_back(plant->capacity_mw);
      if (plant->position) {
        lat_sum += plant->position->lat;
        lon_sum += plant->position->lon;
        ++n_coords;
      }
      if (plant->year_commissioned) {
        min_year = min_year ? std::min(*min_year, *plant->year_commissioned)
                            : *plant->year_commissioned;
      }
    }
    out.name = detail::mode_value(names, [](const std::string& s) -> const std::string& {
      return s;
    });
    out.fueltype = detail::mode_value(fuels, [](FuelType f) { return to_string(f); });
    out.technology = detail::mode_value(techs, [](Technology t) { return to_string(t); });
    out.set = detail::mode_value(sets, [](SetType s) { return to_string(s); });
    out.capacity_mw = median_capacity(std::move(capacities));
    if (n_coords > 0) {
      out.position = GeoPoint{lat_sum / static_cast<double>(n_coords),
                              lon_sum / static_cast<double>(n_coords)};
    }
    out.year_commissioned = min_year;
    out.winning_source = "tie";
  }

  // Backfill gaps from the most reliable member that provides the field.
  if (!out.year_commissioned) {
    for (const Member& m : members) {
      if (m.plant->year_commissioned) {
        out.year_commissioned = m.plant->year_commissioned;
        break;
      }
    }
  }
  if (out.technology == Technology::Unknown) {
    for (const Member& m : members) {
      if (m.plant->technology != Technology::Unknown) {
        out.technology = m.plant->technology;
        break;
      }
    }
  }

  for (const Member& m : members) {
    out.provenance[m.plant->source_id] = m.plant->member_project_ids;
  }
  return out;
}

std::vector<MatchedRecord> reduce_all(const std::vector<LinkChain>& chains,
                                      const PlantsBySource& plants,
                                      const ReliabilityScores& scores) {
  std::vector<MatchedRecord> records;
  records.reserve(chains.size());
  for (const LinkChain& chain : chains) {
    records.push_back(reduce_chain(chain, plants, scores));
  }
  std::sort(records.begin(), records.end(),
            [](const MatchedRecord& a, const MatchedRecord& b) {
              if (a.country != b.country) return a.country < b.country;
              if (a.name != b.name) return a.name < b.name;
              if (a.capacity_mw != b.capacity_mw) return a.capacity_mw < b.capacity_mw;
              return a.provenance < b.provenance;
            });
  return records;
}

}  // namespace fleetmatch
