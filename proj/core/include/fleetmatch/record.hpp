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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fleetmatch/decimal.hpp"
#include "fleetmatch/geo.hpp"
#include "fleetmatch/normalize.hpp"
#include "fleetmatch/vocab.hpp"

namespace fleetmatch {

/// One standardized generating unit. Immutable after ingest.
struct UnitRecord {
  std::string name;  // standardized display name, original casing
  FuelType fueltype = FuelType::Other;
  Technology technology = Technology::Unknown;
  SetType set = SetType::PP;
  std::string country;
  Decimal capacity_mw;  // net MW
  std::optional<int> year_commissioned;
  std::optional<GeoPoint> position;
  std::string source_id;
  std::string project_id;
  NameKey name_key;
};

/// Units of one source clustered into a plant: capacities summed, attributes
/// merged, member ids retained.
struct PlantRecord {
  std::string name;
  FuelType fueltype = FuelType::Other;
  Technology technology = Technology::Unknown;
  SetType set = SetType::PP;
  std::string country;
  Decimal capacity_mw;
  std::optional<int> year_commissioned;
  std::optional<GeoPoint> position;
  std::string source_id;
  std::vector<std::string> member_project_ids;  // sorted, unique
  NameKey name_key;

  std::size_t n_units() const { return member_project_ids.size(); }
};

/// A cross-dataset link between two aggregated plants, identified by their
/// indices into the per-source plant lists.
struct DatasetLink {
  std::string source_a;
  std::size_t plant_a = 0;
  std::string source_b;
  std::size_t plant_b = 0;
  double posterior = 0.0;
};

/// Claims from two or more sources asserted to denote one plant. At most one
/// plant per source.
struct LinkChain {
  std::map<std::string, std::size_t> members;  // source_id -> plant index
  std::vector<DatasetLink> supporting_links;
};

/// The reduced single claim per chain, with full provenance.
struct MatchedRecord {
  std::string name;
  FuelType fueltype = FuelType::Other;
  Technology technology = Technology::Unknown;
  SetType set = SetType::PP;
  std::string country;
  Decimal capacity_mw;
  std::optional<int> year_commissioned;
  std::optional<GeoPoint> position;
  std::map<std::string, std::vector<std::string>> provenance;  // source -> project ids
  std::string winning_source;  // source id, or "tie"

  std::size_t n_sources() const { return provenance.size(); }
};

using PlantsBySource = std::map<std::string, std::vector<PlantRecord>>;

/// How a source reports capacity.
enum class CapacityBasis { Gross, Net, Unknown };

std::string_view to_string(CapacityBasis b);
std::optional<CapacityBasis> parse_capacity_basis(std::string_view text);

/// Translation target of one raw vocabulary term.
struct TermTriple {
  FuelType fueltype = FuelType::Other;
  Technology technology = Technology::Unknown;
  SetType set = SetType::PP;
};

/// Everything the ingest stage needs to know about one source file.
struct SourceDescriptor {
  std::string source_id;
  CapacityBasis capacity_basis = CapacityBasis::Net;
  int reliability_score = 1;
  char delimiter = ',';

  // raw column name per schema field; name/term/country/capacity/project_id
  // are required, the rest optional
  std::map<std::string, std::string> column_map;
  // raw term -> standardized triple; must cover every term in the file
  std::map<std::string, TermTriple> term_map;
  // optional raw -> canonical country spelling fixes
  std::map<std::string, std::string> country_map;

  // operating-status handling, active only when column_map has "status"
  std::vector<std::string> retired_terms;
  std::vector<std::string> intermediate_terms;
};

}  // namespace fleetmatch
