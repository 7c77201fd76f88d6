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

#include "fleetmatch/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include <json.hpp>

#include "fleetmatch/aggregate.hpp"
#include "fleetmatch/csv.hpp"
#include "fleetmatch/ingest.hpp"
#include "fleetmatch/link.hpp"
#include "fleetmatch/reduce.hpp"
#include "fleetmatch/report.hpp"
#include "fleetmatch/snapshots.hpp"

namespace fleetmatch {
namespace {

using nlohmann::ordered_json;

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const std::exception& e) {
    throw StageError(name, e.what());
  }
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

Pipeline::Pipeline(PipelineConfig config, unsigned workers)
    : config_(std::move(config)), workers_(workers == 0 ? 1 : workers),
      stops_(config_.make_stop_tokens()) {}

void Pipeline::run_ingest() {
  stage("ingest", [&] {
    std::filesystem::create_directories(config_.output_dir);

    FactorTable factors({}, config_.rescale_default_factor);
    if (config_.paired_corpus_path) {
      auto pairs = snapshots::read_paired_corpus(*config_.paired_corpus_path);
      auto estimated = estimate_factors(pairs);
      snapshots::write_factors(config_.output_dir / "rescale_factors.csv", estimated);
      factors = FactorTable(std::move(estimated), config_.rescale_default_factor);
    }

    std::set<std::string> all_ids;
    for (const SourceConfig& source : config_.sources) {
      csv::Table table = csv::Table::read_file(source.path, source.descriptor.delimiter);
      auto [units, report] = parse_source(table, source.descriptor, config_.scope,
                                          factors, stops_);
      // (source, project) uniqueness across the whole corpus; within one
      // source parse_source already rejects duplicates.
      for (const UnitRecord& unit : units) {
        if (!all_ids.insert(unit.source_id + "\x01" + unit.project_id).second) {
          throw std::runtime_error("duplicate (source, project) id " + unit.source_id +
                                   "/" + unit.project_id);
        }
      }
      const std::string& id = source.descriptor.source_id;
      snapshots::write_units(config_.output_dir / ("units_" + id + ".csv"), units);
      snapshots::write_ingest_report(config_.output_dir / ("ingest_" + id + ".json"),
                                     report);
    }
  });
}

void Pipeline::run_aggregate() {
  stage("aggregate", [&] {
    for (const SourceConfig& source : config_.sources) {
      const std::string& id = source.descriptor.source_id;
      auto units = snapshots::read_units(config_.output_dir / ("units_" + id + ".csv"),
                                         stops_);
      auto plants = aggregate_source(units, config_.aggregation, workers_);
      snapshots::write_plants(config_.output_dir / ("plants_" + id + ".csv"), plants);
    }
  });
}

PlantsBySource Pipeline::load_plants() const {
  PlantsBySource plants;
  for (const SourceConfig& source : config_.sources) {
    const std::string& id = source.descriptor.source_id;
    plants[id] = snapshots::read_plants(config_.output_dir / ("plants_" + id + ".csv"),
                                        stops_);
  }
  return plants;
}

void Pipeline::run_match() {
  stage("match", [&] {
    PlantsBySource plants = load_plants();

    std::vector<DatasetLink> links;
    for (auto a = plants.begin(); a != plants.end(); ++a) {
      for (auto b = std::next(a); b != plants.end(); ++b) {
        auto pair_links = match_dataset_pair(a->second, b->second, config_.linkage,
                                             workers_);
        links.insert(links.end(), pair_links.begin(), pair_links.end());
      }
    }
    snapshots::write_links(config_.output_dir / "links.csv", links);

    auto chains = join_chains(links);
    snapshots::write_chains(config_.output_dir / "chains.json", chains, plants);
  });
}

void Pipeline::run_reduce() {
  stage("reduce", [&] {
    PlantsBySource plants = load_plants();
    auto chains = snapshots::read_chains(config_.output_dir / "chains.json");
    auto matched = reduce_all(chains, plants, config_.scores);

    if (config_.renewables_path) {
      csv::Table table = csv::Table::read_file(*config_.renewables_path,
                                               config_.renewables_descriptor->delimiter);
      auto [appended, report] = append_renewables(std::move(matched), table,
                                                  *config_.renewables_descriptor,
                                                  config_.scope);
      matched = std::move(appended);
      snapshots::write_ingest_report(
          config_.output_dir /
              ("ingest_" + config_.renewables_descriptor->source_id + ".json"),
          report);
    }
    snapshots::write_matched(config_.output_dir / "matched.csv", matched);
  });
}

void Pipeline::run_report() {
  stage("report", [&] {
    auto matched = snapshots::read_matched(config_.output_dir / "matched.csv");
    const std::filesystem::path report_dir = config_.output_dir / "report";
    std::filesystem::create_directories(report_dir);

    auto write_grouping = [&](GroupBy by, const std::filesystem::path& path,
                              const std::vector<std::string>& header) {
      auto table = group_capacity(matched, by);
      auto out = open_out(path);
      csv::Writer writer(out, ',');
      writer.write_row(header);
      for (const auto& [key, capacity] : table) {
        std::vector<std::string> row;
        if (by == GroupBy::Both) {
          auto split = key.find('|');
          row = {key.substr(0, split), key.substr(split + 1), capacity.str()};
        } else {
          row = {key, capacity.str()};
        }
        writer.write_row(row);
      }
    };
    write_grouping(GroupBy::Fueltype, report_dir / "capacity_by_fueltype.csv",
                   {"Fueltype", "CapacityMW"});
    write_grouping(GroupBy::Country, report_dir / "capacity_by_country.csv",
                   {"Country", "CapacityMW"});
    write_grouping(GroupBy::Both, report_dir / "capacity_by_country_fueltype.csv",
                   {"Country", "Fueltype", "CapacityMW"});

    auto coverage = year_coverage(matched);
    {
      auto out = open_out(report_dir / "year_coverage.csv");
      csv::Writer writer(out, ',');
      writer.write_row({"Country", "RecordsWithYear", "RecordsTotal", "RatioPercent"});
      for (const YearCoverageRow& row : coverage) {
        writer.write_row({row.country, std::to_string(row.records_with_year),
                          std::to_string(row.records_total),
                          std::to_string(row.ratio_percent)});
      }
    }

    ordered_json summary;
    Decimal total;
    for (const MatchedRecord& record : matched) total += record.capacity_mw;
    summary["records"] = matched.size();
    summary["total_capacity_mw"] = total.str();

    if (config_.statistics_path) {
      auto stats = snapshots::read_statistics(*config_.statistics_path);
      auto comparison = compare_to_statistics(matched, stats, config_.scope);
      {
        auto out = open_out(report_dir / "statistics_comparison.csv");
        csv::Writer writer(out, ',');
        writer.write_row({"Country", "Fueltype", "MatchedMW", "StatisticsMW",
                          "DeviationMW"});
        for (const ComparisonRow& row : comparison.rows) {
          writer.write_row({row.country, std::string(to_string(row.fueltype)),
                            row.matched_mw.str(), row.statistics_mw.str(),
                            row.deviation_mw.str()});
        }
      }
      summary["statistics_total_mw"] = comparison.total_statistics_mw.str();
      summary["overall_ratio"] = comparison.overall_ratio;
      summary["warnings"] = comparison.warnings;

      // Country-level agreement on log axes, when enough countries exist.
      std::map<std::string, Decimal> matched_by_country, stats_by_country;
      for (const ComparisonRow& row : comparison.rows) {
        matched_by_country[row.country] += row.matched_mw;
        stats_by_country[row.country] += row.statistics_mw;
      }
      try {
        std::vector<std::string> r2_warnings;
        summary["country_r2"] = country_r2(stats_by_country, matched_by_country,
                                           &r2_warnings);
        for (const std::string& w : r2_warnings) summary["warnings"].push_back(w);
      } catch (const std::exception& e) {
        summary["country_r2"] = nullptr;
        summary["warnings"].push_back(std::string("country_r2 skipped: ") + e.what());
      }
    } else {
      std::cerr << "report: no statistics file configured, comparison skipped\n";
      summary["overall_ratio"] = nullptr;
    }

    auto out = open_out(report_dir / "summary.json");
    out << summary.dump(2) << '\n';
  });
}

void Pipeline::run_validate() {
  stage("validate", [&] {
    if (!config_.truth_links_path) {
      throw std::runtime_error("validate requires truth_links in the config");
    }
    auto truth_units = snapshots::read_truth_links(*config_.truth_links_path);
    PlantsBySource plants = load_plants();
    auto chains = snapshots::read_chains(config_.output_dir / "chains.json");

    // Plant identity for comparison: the smallest member project id, which is
    // stable across runs and independent of plant list order.
    std::map<std::pair<std::string, std::string>, std::string> unit_to_plant;
    for (const auto& [source_id, list] : plants) {
      for (const PlantRecord& plant : list) {
        for (const std::string& member : plant.member_project_ids) {
          unit_to_plant[{source_id, member}] = plant.member_project_ids.front();
        }
      }
    }

    std::size_t unresolved = 0;
    std::set<ClaimLink> truth_set;
    for (const ClaimLink& link : truth_units) {
      auto a = unit_to_plant.find({link.source_a, link.id_a});
      auto b = unit_to_plant.find({link.source_b, link.id_b});
      if (a == unit_to_plant.end() || b == unit_to_plant.end()) {
        ++unresolved;
        continue;
      }
      truth_set.insert(
          ClaimLink{link.source_a, a->second, link.source_b, b->second}.canonical());
    }

    std::set<ClaimLink> found_set;
    for (const LinkChain& chain : chains) {
      for (auto a = chain.members.begin(); a != chain.members.end(); ++a) {
        for (auto b = std::next(a); b != chain.members.end(); ++b) {
          const std::string& key_a = plants.at(a->first)[a->second].member_project_ids.front();
          const std::string& key_b = plants.at(b->first)[b->second].member_project_ids.front();
          found_set.insert(ClaimLink{a->first, key_a, b->first, key_b}.canonical());
        }
      }
    }

    std::vector<ClaimLink> found(found_set.begin(), found_set.end());
    std::vector<ClaimLink> truth(truth_set.begin(), truth_set.end());
    ValidationResult result = validate_links(found, truth);

    ordered_json node;
    node["truth_links_input"] = truth_units.size();
    node["truth_links_plant_level"] = truth.size();
    node["truth_links_unresolved"] = unresolved;
    node["found_links"] = found.size();
    node["correct"] = result.correct;
    node["wrong"] = result.wrong;
    node["missed"] = result.missed;
    node["precision"] = result.precision;
    node["recall"] = result.recall;
    auto dump_links = [](const std::vector<ClaimLink>& links) {
      ordered_json arr = ordered_json::array();
      for (const ClaimLink& link : links) {
        arr.push_back({{"source_a", link.source_a},
                       {"id_a", link.id_a},
                       {"source_b", link.source_b},
                       {"id_b", link.id_b}});
      }
      return arr;
    };
    node["wrong_links"] = dump_links(result.wrong_links);
    node["missed_links"] = dump_links(result.missed_links);

    auto out = open_out(config_.output_dir / "validation.json");
    out << node.dump(2) << '\n';
  });
}

void Pipeline::run_all() {
  run_ingest();
  run_aggregate();
  run_match();
  run_reduce();
  run_report();
  if (config_.truth_links_path) {
    run_validate();
  }
}

}  // namespace fleetmatch
