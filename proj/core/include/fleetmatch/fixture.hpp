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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fleetmatch/record.hpp"
#include "fleetmatch/report.hpp"
#include "fleetmatch/rescale.hpp"

namespace fleetmatch {

/// How one synthetic source distorts the ground-truth fleet.
struct SourcePerturbation {
  std::string source_id = "SRC";
  CapacityBasis basis = CapacityBasis::Net;
  int score = 3;
  char delimiter = ',';
  bool has_coordinates = true;
  double presence_prob = 1.0;   // probabilistic mode only
  double year_prob = 1.0;       // chance the year survives into this source
  double split_prob = 0.0;      // chance a plant is listed as separate blocks
  int max_blocks = 3;
  double typo_prob = 0.0;       // one-character name edit
  double prefix_prob = 0.0;     // generic word prepended / legal suffix
  double coord_jitter_km = 0.0;
  double capacity_noise = 0.0;  // relative, symmetric
  double fuel_flip_prob = 0.0;  // only applied below fuel_flip_max_mw
  double fuel_flip_max_mw = 50.0;
  std::size_t windsolar_rows = 0;     // noise rows dropped at ingest
  std::size_t out_of_scope_rows = 0;  // noise rows outside the scope
  std::size_t retired_rows = 0;       // duplicated rows with retired status
  double intermediate_prob = 0.0;     // kept rows flagged as in-between state
};

/// Full recipe for a synthetic multi-source corpus. Presence is either
/// exact (`shared_plants` in every source plus per-source exclusives) or
/// probabilistic (per-source presence_prob over `n_plants`).
struct FixtureSpec {
  std::uint64_t seed = 1;
  std::size_t n_plants = 100;
  std::vector<SourcePerturbation> sources;

  std::optional<std::size_t> shared_plants;
  std::vector<std::size_t> exclusive_plants;

  /// Shared plants deliberately made unmatchable in the last source: fresh
  /// name, dropped coordinates and year, flipped fuel. They stay small so a
  /// miss barely moves the capacity total. Exact mode only.
  std::size_t hard_plants = 0;
  double hard_capacity_max_mw = 25.0;

  std::vector<std::string> countries = {"Germany"};
  int year_min = 1950;
  int year_max = 2016;
  double chp_prob = 0.15;
  std::size_t n_renewables = 0;

  static FixtureSpec from_json_file(const std::filesystem::path& path);

  /// Two identical unperturbed views of every plant; the pipeline must
  /// recover every link.
  static FixtureSpec clean(std::size_t n_plants, std::size_t n_sources,
                           std::uint64_t seed);
  /// Mildly perturbed probabilistic corpus for property and scale tests.
  static FixtureSpec generic(std::size_t n_plants, std::size_t n_sources,
                             std::uint64_t seed);
};

/// One ground-truth plant and the sources that list it.
struct TruePlant {
  std::string name;
  FuelType fueltype = FuelType::Other;
  Technology technology = Technology::Unknown;
  SetType set = SetType::PP;
  std::string country;
  Decimal capacity_mw;
  int year = 0;
  GeoPoint position;
  bool hard = false;
  std::vector<std::size_t> sources;  // indices into spec.sources
};

struct RenewableRow {
  std::string name;  // often blank
  FuelType fueltype = FuelType::Wind;
  Technology technology = Technology::Onshore;
  std::string country;
  Decimal capacity_mw;
  std::optional<int> year;
  std::optional<GeoPoint> position;
  std::string project_id;
};

/// The in-memory synthetic world: ground truth plus each source's distorted
/// view in standardized (net) form. Deterministic in spec.seed.
struct FixtureWorld {
  FixtureSpec spec;
  std::vector<TruePlant> plants;
  std::vector<std::vector<UnitRecord>> source_units;  // per source, net basis
  std::vector<ClaimLink> truth_links;                 // unit level
  std::vector<RenewableRow> renewables;
  std::vector<CapacityPair> paired_corpus;
  std::map<std::pair<FuelType, Technology>, double> conversion_ratio;  // net/gross
};

FixtureWorld build_world(const FixtureSpec& spec);

struct FixtureSummary {
  std::filesystem::path config_path;
  std::size_t n_plants = 0;
  std::size_t truth_unit_links = 0;
  std::map<std::string, std::size_t> rows_per_source;
};

/// Writes the world as raw source files plus truth links, reference
/// statistics, a paired net/gross corpus, and a ready-to-run pipeline
/// config. Same seed, same bytes.
FixtureSummary write_fixture(const FixtureWorld& world,
                             const std::filesystem::path& out_dir);

inline FixtureSummary make_fixture(const FixtureSpec& spec,
                                   const std::filesystem::path& out_dir) {
  return write_fixture(build_world(spec), out_dir);
}

}  // namespace fleetmatch
