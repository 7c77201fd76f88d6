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

#include <filesystem>
#include <span>
#include <vector>

#include "fleetmatch/ingest.hpp"
#include "fleetmatch/normalize.hpp"
#include "fleetmatch/record.hpp"
#include "fleetmatch/report.hpp"
#include "fleetmatch/rescale.hpp"

namespace fleetmatch::snapshots {

/// Stage snapshots are plain CSV/JSON files in the output directory. Every
/// writer here is deterministic: identical inputs give byte-identical files,
/// and a written snapshot reloads to exactly the values written.

// -- standardized units, Table-style column order ---------------------------
// Name,Fueltype,Technology,Set,Country,Capacity,YearCommissioned,lat,lon,
// File,projectID
void write_units(const std::filesystem::path& path, std::span<const UnitRecord> units);
std::vector<UnitRecord> read_units(const std::filesystem::path& path,
                                   const StopTokens& stops);

// -- aggregated plants: unit columns plus projectID as a JSON array and
//    nUnits -----------------------------------------------------------------
void write_plants(const std::filesystem::path& path, std::span<const PlantRecord> plants);
std::vector<PlantRecord> read_plants(const std::filesystem::path& path,
                                     const StopTokens& stops);

// -- pairwise links and joined chains ---------------------------------------
void write_links(const std::filesystem::path& path, std::span<const DatasetLink> links);
std::vector<DatasetLink> read_links(const std::filesystem::path& path);

void write_chains(const std::filesystem::path& path, std::span<const LinkChain> chains,
                  const PlantsBySource& plants);
std::vector<LinkChain> read_chains(const std::filesystem::path& path);

// -- the final dataset: Table-style columns, File = winning source,
//    projectID = JSON map source -> [project ids] ---------------------------
void write_matched(const std::filesystem::path& path, std::span<const MatchedRecord> records);
std::vector<MatchedRecord> read_matched(const std::filesystem::path& path);

// -- ingest reports ----------------------------------------------------------
void write_ingest_report(const std::filesystem::path& path, const IngestReport& report);

// -- rescale factor table, fixed column set ----------------------------------
// fueltype,technology,mean_ratio,median_ratio,q1,q3,n_samples
void write_factors(const std::filesystem::path& path, std::span<const RescaleFactor> factors);
std::vector<RescaleFactor> read_factors(const std::filesystem::path& path);

// -- reference inputs ---------------------------------------------------------
// country,fueltype,capacity_mw with statistical category remapping
std::vector<StatisticsRow> read_statistics(const std::filesystem::path& path);
// net/gross reference pairs: fueltype,technology,net_mw,gross_mw
std::vector<CapacityPair> read_paired_corpus(const std::filesystem::path& path);
// source_a,project_id_a,source_b,project_id_b
std::vector<ClaimLink> read_truth_links(const std::filesystem::path& path);
void write_truth_links(const std::filesystem::path& path, std::span<const ClaimLink> links);

}  // namespace fleetmatch::snapshots
