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

#include "fleetmatch/snapshots.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "fleetmatch/csv.hpp"

namespace fleetmatch::snapshots {
namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& message) {
  throw std::runtime_error(path.string() + ": " + message);
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

double parse_double_or_fail(const std::string& text, const std::filesystem::path& path) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(path, "bad number '" + text + "'");
  }
  return value;
}

const std::vector<std::string> kUnitHeader = {
    "Name", "Fueltype", "Technology", "Set", "Country", "Capacity",
    "YearCommissioned", "lat", "lon", "File", "projectID"};

template <typename Record>
std::vector<std::string> unit_style_row(const Record& r, const std::string& file,
                                        const std::string& project_id) {
  return {
      r.name,
      std::string(to_string(r.fueltype)),
      std::string(to_string(r.technology)),
      std::string(to_string(r.set)),
      r.country,
      r.capacity_mw.str(),
      r.year_commissioned ? std::to_string(*r.year_commissioned) : "",
      r.position ? csv::format_double(r.position->lat) : "",
      r.position ? csv::format_double(r.position->lon) : "",
      file,
      project_id,
  };
}

// Shared Table-column decoding for units and plants.
template <typename Record>
void decode_unit_columns(const csv::Row& row, const csv::Table& table,
                         const std::filesystem::path& path, Record& out) {
  out.name = row.fields[0];
  auto fuel = parse_fueltype(row.fields[1]);
  auto tech = parse_technology(row.fields[2]);
  auto set = parse_settype(row.fields[3]);
  if (!fuel || !tech || !set) fail(path, "bad vocabulary on line " + std::to_string(row.line));
  out.fueltype = *fuel;
  out.technology = *tech;
  out.set = *set;
  out.country = row.fields[4];
  auto capacity = Decimal::parse(row.fields[5]);
  if (!capacity) fail(path, "bad capacity on line " + std::to_string(row.line));
  out.capacity_mw = *capacity;
  if (!row.fields[6].empty()) {
    out.year_commissioned = static_cast<int>(parse_double_or_fail(row.fields[6], path));
  }
  if (!row.fields[7].empty() && !row.fields[8].empty()) {
    out.position = GeoPoint{parse_double_or_fail(row.fields[7], path),
                            parse_double_or_fail(row.fields[8], path)};
  }
}

}  // namespace

void write_units(const std::filesystem::path& path, std::span<const UnitRecord> units) {
  auto out = open_out(path);
  csv::Writer writer(out, ',');
  writer.write_row(kUnitHeader);
  for (const UnitRecord& unit : units) {
    writer.write_row(unit_style_row(unit, unit.source_id, unit.project_id));
  }
}

std::vector<UnitRecord> read_units(const std::filesystem::path& path,
                                   const StopTokens& stops) {
  csv::Table table = csv::Table::read_file(path, ',');
  if (table.header() != kUnitHeader) fail(path, "unexpected unit snapshot header");
  std::vector<UnitRecord> units;
  units.reserve(table.rows().size());
  for (const csv::Row& row : table.rows()) {
    if (row.fields.size() != kUnitHeader.size()) {
      fail(path, "wrong field count on line " + std::to_string(row.line));
    }
    UnitRecord unit;
    decode_unit_columns(row, table, path, unit);
    unit.source_id = row.fields[9];
    unit.project_id = row.fields[10];
    unit.name_key = make_name_key(unit.name, stops);
    units.push_back(std::move(unit));
  }
  return units;
}

void write_plants(const std::filesystem::path& path, std::span<const PlantRecord> plants) {
  auto out = open_out(path);
  csv::Writer writer(out, ',');
  std::vector<std::string> header = kUnitHeader;
  header.push_back("nUnits");
  writer.write_row(header);
  for (const PlantRecord& plant : plants) {
    ordered_json ids = ordered_json::array();
    for (const std::string& id : plant.member_project_ids) ids.push_back(id);
    std::vector<std::string> row = unit_style_row(plant, plant.source_id, ids.dump());
    row.push_back(std::to_string(plant.n_units()));
    writer.write_row(row);
  }
}

std::vector<PlantRecord> read_plants(const std::filesystem::path& path,
                                     const StopTokens& stops) {
  csv::Table table = csv::Table::read_file(path, ',');
  std::vector<PlantRecord> plants;
  for (const csv::Row& row : table.rows()) {
    if (row.fields.size() != kUnitHeader.size() + 1) {
      fail(path, "wrong field count on line " + std::to_string(row.line));
    }
    PlantRecord plant;
    decode_unit_columns(row, table, path, plant);
    plant.source_id = row.fields[9];
    const ordered_json member_ids = ordered_json::parse(row.fields[10]);
    for (const auto& id : member_ids) {
      plant.member_project_ids.push_back(id.get<std::string>());
    }
    plant.name_key = make_name_key(plant.name, stops);
    plants.push_back(std::move(plant));
  }
  return plants;
}

void write_links(const std::filesystem::path& path, std::span<const DatasetLink> links) {
  auto out = open_out(path);
  csv::Writer writer(out, ',');
  writer.write_row({"SourceA", "PlantA", "SourceB", "PlantB", "Posterior"});
  for (const DatasetLink& link : links) {
    writer.write_row({link.source_a, std::to_string(link.plant_a), link.source_b,
                      std::to_string(link.plant_b), csv::format_double(link.posterior)});
  }
}

std::vector<DatasetLink> read_links(const std::filesystem::path& path) {
  csv::Table table = csv::Table::read_file(path, ',');
  std::vector<DatasetLink> links;
  for (const csv::Row& row : table.rows()) {
    if (row.fields.size() != 5) fail(path, "wrong field count on line " + std::to_string(row.line));
    DatasetLink link;
    link.source_a = row.fields[0];
    link.plant_a = static_cast<std::size_t>(parse_double_or_fail(row.fields[1], path));
    link.source_b = row.fields[2];
    link.plant_b = static_cast<std::size_t>(parse_double_or_fail(row.fields[3], path));
    link.posterior = parse_double_or_fail(row.fields[4], path);
    links.push_back(std::move(link));
  }
  return links;
}

void write_chains(const std::filesystem::path& path, std::span<const LinkChain> chains,
                  const PlantsBySource& plants) {
  ordered_json root;
  root["chains"] = ordered_json::array();
  std::size_t chain_id = 0;
  for (const LinkChain& chain : chains) {
    ordered_json members = ordered_json::array();
    for (const auto& [source_id, plant_index] : chain.members) {
      double support = 0.0;
      for (const DatasetLink& link : chain.supporting_links) {
        if ((link.source_a == source_id && link.plant_a == plant_index) ||
            (link.source_b == source_id && link.plant_b == plant_index)) {
          support = std::max(support, link.posterior);
        }
      }
      ordered_json ids = ordered_json::array();
      auto it = plants.find(source_id);
      if (it == plants.end() || plant_index >= it->second.size()) {
        throw std::runtime_error("chains: member references unknown plant");
      }
      for (const std::string& id : it->second[plant_index].member_project_ids) {
        ids.push_back(id);
      }
      members.push_back({{"source_id", source_id},
                         {"plant", plant_index},
                         {"project_ids", ids},
                         {"posterior_support", support}});
    }
    ordered_json links = ordered_json::array();
    for (const DatasetLink& link : chain.supporting_links) {
      links.push_back({{"source_a", link.source_a},
                       {"plant_a", link.plant_a},
                       {"source_b", link.source_b},
                       {"plant_b", link.plant_b},
                       {"posterior", link.posterior}});
    }
    root["chains"].push_back(
        {{"chain_id", chain_id++}, {"members", members}, {"links", links}});
  }
  auto out = open_out(path);
  out << root.dump(2) << '\n';
}

std::vector<LinkChain> read_chains(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  ordered_json root = ordered_json::parse(in);
  std::vector<LinkChain> chains;
  for (const auto& chain_node : root.at("chains")) {
    LinkChain chain;
    for (const auto& member : chain_node.at("members")) {
      chain.members[member.at("source_id").get<std::string>()] =
          member.at("plant").get<std::size_t>();
    }
    for (const auto& link_node : chain_node.at("links")) {
      DatasetLink link;
      link.source_a = link_node.at("source_a").get<std::string>();
      link.plant_a = link_node.at("plant_a").get<std::size_t>();
      link.source_b = link_node.at("source_b").get<std::string>();
      link.plant_b = link_node.at("plant_b").get<std::size_t>();
      link.posterior = link_node.at("posterior").get<double>();
      chain.supporting_links.push_back(std::move(link));
    }
    chains.push_back(std::move(chain));
  }
  return chains;
}

void write_matched(const std::filesystem::path& path, std::span<const MatchedRecord> records) {
  auto out = open_out(path);
  csv::Writer writer(out, ',');
  writer.write_row(kUnitHeader);
  for (const MatchedRecord& record : records) {
    ordered_json provenance;
    for (const auto& [source_id, ids] : record.provenance) {
      provenance[source_id] = ids;
    }
    writer.write_row(unit_style_row(record, record.winning_source, provenance.dump()));
  }
}

std::vector<MatchedRecord> read_matched(const std::filesystem::path& path) {
  csv::Table table = csv::Table::read_file(path, ',');
  if (table.header() != kUnitHeader) fail(path, "unexpected matched dataset header");
  std::vector<MatchedRecord> records;
  for (const csv::Row& row : table.rows()) {
    if (row.fields.size() != kUnitHeader.size()) {
      fail(path, "wrong field count on line " + std::to_string(row.line));
    }
    MatchedRecord record;
    decode_unit_columns(row, table, path, record);
    record.winning_source = row.fields[9];
    const ordered_json provenance = ordered_json::parse(row.fields[10]);
    for (const auto& [source_id, ids] : provenance.items()) {
      for (const auto& id : ids) {
        record.provenance[source_id].push_back(id.get<std::string>());
      }
    }
    records.push_back(std::move(record));
  }
  return records;
}

void write_ingest_report(const std::filesystem::path& path, const IngestReport& report) {
  ordered_json node;
  node["source_id"] = report.source_id;
  node["rows_read"] = report.rows_read;
  node["rows_kept"] = report.rows_kept;
  node["rows_dropped_scope"] = report.rows_dropped_scope;
  node["rows_dropped_windsolar"] = report.rows_dropped_windsolar;
  node["rows_rejected"] = report.rows_rejected;
  node["reject_reasons"] = ordered_json::object();
  for (const auto& [reason, count] : report.reject_reasons) {
    node["reject_reasons"][reason] = count;
  }
  node["total_capacity_mw"] = report.total_capacity_mw.str();
  node["capacity_read_mw"] = report.capacity_read_mw.str();
  node["capacity_dropped_mw"] = report.capacity_dropped_mw.str();
  node["capacity_rejected_mw"] = report.capacity_rejected_mw.str();
  node["intermediate_status_ids"] = report.intermediate_status_ids;
  auto out = open_out(path);
  out << node.dump(2) << '\n';
}

void write_factors(const std::filesystem::path& path, std::span<const RescaleFactor> factors) {
  auto out = open_out(path);
  csv::Writer writer(out, ',');
  writer.write_row({"fueltype", "technology", "mean_ratio", "median_ratio", "q1", "q3",
                    "n_samples"});
  for (const RescaleFactor& f : factors) {
    writer.write_row({std::string(to_string(f.fueltype)), std::string(to_string(f.technology)),
                      csv::format_double(f.mean_ratio), csv::format_double(f.median_ratio),
                      csv::format_double(f.q1), csv::format_double(f.q3),
                      std::to_string(f.n_samples)});
  }
}

std::vector<RescaleFactor> read_factors(const std::filesystem::path& path) {
  csv::Table table = csv::Table::read_file(path, ',');
  std::vector<RescaleFactor> factors;
  for (const csv::Row& row : table.rows()) {
    if (row.fields.size() != 7) fail(path, "wrong field count on line " + std::to_string(row.line));
    RescaleFactor f;
    auto fuel = parse_fueltype(row.fields[0]);
    auto tech = parse_technology(row.fields[1]);
    if (!fuel || !tech) fail(path, "bad vocabulary on line " + std::to_string(row.line));
    f.fueltype = *fuel;
    f.technology = *tech;
    f.mean_ratio = parse_double_or_fail(row.fields[2], path);
    f.median_ratio = parse_double_or_fail(row.fields[3], path);
    f.q1 = parse_double_or_fail(row.fields[4], path);
    f.q3 = parse_double_or_fail(row.fields[5], path);
    f.n_samples = static_cast<std::size_t>(parse_double_or_fail(row.fields[6], path));
    factors.push_back(std::move(f));
  }
  return factors;
}

std::vector<StatisticsRow> read_statistics(const std::filesystem::path& path) {
  csv::Table table = csv::Table::read_file(path, ',');
  auto country = table.column("country");
  auto fueltype = table.column("fueltype");
  auto capacity = table.column("capacity_mw");
  if (!country || !fueltype || !capacity) {
    fail(path, "statistics need country,fueltype,capacity_mw columns");
  }
  std::vector<StatisticsRow> rows;
  for (const csv::Row& row : table.rows()) {
    StatisticsRow stat;
    stat.country = row.fields[*country];
    auto fuel = remap_statistics_category(row.fields[*fueltype]);
    if (!fuel) {
      fail(path, "unknown statistical category '" + row.fields[*fueltype] + "' on line " +
                     std::to_string(row.line));
    }
    stat.fueltype = *fuel;
    auto mw = Decimal::parse(row.fields[*capacity]);
    if (!mw) fail(path, "bad capacity on line " + std::to_string(row.line));
    stat.capacity_mw = *mw;
    rows.push_back(std::move(stat));
  }
  return rows;
}

std::vector<CapacityPair> read_paired_corpus(const std::filesystem::path& path) {
  csv::Table table = csv::Table::read_file(path, ',');
  auto fueltype = table.column("fueltype");
  auto technology = table.column("technology");
  auto net = table.column("net_mw");
  auto gross = table.column("gross_mw");
  if (!fueltype || !technology || !net || !gross) {
    fail(path, "paired corpus needs fueltype,technology,net_mw,gross_mw columns");
  }
  std::vector<CapacityPair> pairs;
  for (const csv::Row& row : table.rows()) {
    CapacityPair pair;
    auto fuel = parse_fueltype(row.fields[*fueltype]);
    auto tech = parse_technology(row.fields[*technology]);
    if (!fuel || !tech) fail(path, "bad vocabulary on line " + std::to_string(row.line));
    pair.fueltype = *fuel;
    pair.technology = *tech;
    pair.net_mw = parse_double_or_fail(row.fields[*net], path);
    pair.gross_mw = parse_double_or_fail(row.fields[*gross], path);
    pairs.push_back(pair);
  }
  return pairs;
}

std::vector<ClaimLink> read_truth_links(const std::filesystem::path& path) {
  csv::Table table = csv::Table::read_file(path, ',');
  auto sa = table.column("source_a");
  auto ia = table.column("project_id_a");
  auto sb = table.column("source_b");
  auto ib = table.column("project_id_b");
  if (!sa || !ia || !sb || !ib) {
    fail(path, "truth links need source_a,project_id_a,source_b,project_id_b columns");
  }
  std::vector<ClaimLink> links;
  for (const csv::Row& row : table.rows()) {
    links.push_back(ClaimLink{row.fields[*sa], row.fields[*ia], row.fields[*sb],
                              row.fields[*ib]});
  }
  return links;
}

void write_truth_links(const std::filesystem::path& path, std::span<const ClaimLink> links) {
  auto out = open_out(path);
  csv::Writer writer(out, ',');
  writer.write_row({"source_a", "project_id_a", "source_b", "project_id_b"});
  for (const ClaimLink& link : links) {
    writer.write_row({link.source_a, link.id_a, link.source_b, link.id_b});
  }
}

}  // namespace fleetmatch::snapshots
