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

#include "fleetmatch/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ctime>
#include <stdexcept>
#include <unordered_set>

namespace fleetmatch {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

int current_year() {
  std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  return utc.tm_year + 1900;
}

std::optional<double> parse_double(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) return std::nullopt;
  return value;
}

std::optional<int> parse_int(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) return std::nullopt;
  return value;
}

// Resolves desc.column_map onto the table header once, up front.
class ColumnResolver {
 public:
  ColumnResolver(const csv::Table& table, const SourceDescriptor& desc) {
    for (const char* required : {"name", "term", "country", "capacity", "project_id"}) {
      indices_[required] = resolve(table, desc, required, /*required=*/true);
    }
    for (const char* optional : {"year", "lat", "lon", "status"}) {
      if (desc.column_map.count(optional)) {
        indices_[optional] = resolve(table, desc, optional, /*required=*/true);
      }
    }
  }

  bool has(const std::string& field) const { return indices_.count(field) > 0; }

  const std::string& get(const csv::Row& row, const std::string& field) const {
    static const std::string kEmpty;
    std::size_t idx = indices_.at(field);
    return idx < row.fields.size() ? row.fields[idx] : kEmpty;
  }

 private:
  static std::size_t resolve(const csv::Table& table, const SourceDescriptor& desc,
                             const std::string& field, bool required) {
    auto mapped = desc.column_map.find(field);
    if (mapped == desc.column_map.end()) {
      throw std::runtime_error("ingest: source '" + desc.source_id +
                               "' has no column mapping for '" + field + "'");
    }
    auto idx = table.column(mapped->second);
    if (!idx) {
      throw std::runtime_error("ingest: source '" + desc.source_id + "' column '" +
                               mapped->second + "' not present in file");
    }
    return *idx;
  }

  std::map<std::string, std::size_t> indices_;
};

}  // namespace

TermTriple translate_term(std::string_view raw, const SourceDescriptor& desc) {
  std::string key = lower(trim(raw));
  auto it = desc.term_map.find(key);
  if (it == desc.term_map.end()) {
    throw UnmappedTermError(std::string(raw));
  }
  return it->second;
}

std::pair<std::vector<UnitRecord>, IngestReport> parse_source(
    const csv::Table& table, const SourceDescriptor& desc,
    const std::set<std::string>& scope, const FactorTable& factors,
    const StopTokens& stops) {
  const ColumnResolver columns(table, desc);
  const int year_max = current_year();

  std::vector<UnitRecord> records;
  IngestReport report;
  report.source_id = desc.source_id;
  std::unordered_set<std::string> seen_ids;

  auto reject = [&report](const std::string& reason, Decimal capacity) {
    ++report.rows_rejected;
    ++report.reject_reasons[reason];
    report.capacity_rejected_mw += capacity;
  };

  for (const csv::Row& row : table.rows()) {
    ++report.rows_read;

    std::optional<Decimal> capacity = Decimal::parse(columns.get(row, "capacity"));
    Decimal parsed_capacity = capacity.value_or(Decimal{});
    report.capacity_read_mw += parsed_capacity;

    // Status first: a retired unit is rejected no matter how it parses.
    bool intermediate = false;
    if (columns.has("status")) {
      std::string status = lower(trim(columns.get(row, "status")));
      if (std::find(desc.retired_terms.begin(), desc.retired_terms.end(), status) !=
          desc.retired_terms.end()) {
        reject("retired status", parsed_capacity);
        continue;
      }
      intermediate = std::find(desc.intermediate_terms.begin(),
                               desc.intermediate_terms.end(),
                               status) != desc.intermediate_terms.end();
    }

    TermTriple triple;
    try {
      triple = translate_term(columns.get(row, "term"), desc);
    } catch (const UnmappedTermError& e) {
      reject(e.what(), parsed_capacity);
      continue;
    }

    if (!capacity || !capacity->is_positive()) {
      reject("missing or non-positive capacity", parsed_capacity);
      continue;
    }

    std::string country = trim(columns.get(row, "country"));
    if (auto fixed = desc.country_map.find(country); fixed != desc.country_map.end()) {
      country = fixed->second;
    }
    if (!scope.contains(country)) {
      ++report.rows_dropped_scope;
      report.capacity_dropped_mw += parsed_capacity;
      continue;
    }

    if (is_wind_or_solar(triple.fueltype)) {
      ++report.rows_dropped_windsolar;
      report.capacity_dropped_mw += parsed_capacity;
      continue;
    }

    UnitRecord unit;
    unit.name = trim(columns.get(row, "name"));
    unit.name_key = make_name_key(unit.name, stops);
    if (unit.name_key.canonical.empty()) {
      reject("name empty after normalization", parsed_capacity);
      continue;
    }

    unit.project_id = trim(columns.get(row, "project_id"));
    if (unit.project_id.empty()) {
      reject("missing project id", parsed_capacity);
      continue;
    }
    if (!seen_ids.insert(unit.project_id).second) {
      reject("duplicate project id", parsed_capacity);
      continue;
    }

    unit.fueltype = triple.fueltype;
    unit.technology = triple.technology;
    unit.set = triple.set;
    unit.country = std::move(country);
    unit.source_id = desc.source_id;

    unit.capacity_mw = *capacity;
    if (desc.capacity_basis == CapacityBasis::Gross) {
      unit = apply_factor(unit, factors);
    }

    // A commissioning year outside the plausible range is treated as absent,
    // same as a coordinate on only one axis: the unit itself stays.
    if (columns.has("year")) {
      std::optional<int> year = parse_int(columns.get(row, "year"));
      if (year && *year >= 1900 && *year <= year_max) {
        unit.year_commissioned = year;
      }
    }
    if (columns.has("lat") && columns.has("lon")) {
      std::optional<double> lat = parse_double(columns.get(row, "lat"));
      std::optional<double> lon = parse_double(columns.get(row, "lon"));
      if (lat && lon && valid_coordinates(*lat, *lon)) {
        unit.position = GeoPoint{*lat, *lon};
      }
    }

    if (intermediate) {
      report.intermediate_status_ids.push_back(unit.project_id);
    }
    ++report.rows_kept;
    report.total_capacity_mw += unit.capacity_mw;
    records.push_back(std::move(unit));
  }

  return {std::move(records), std::move(report)};
}

std::pair<std::vector<MatchedRecord>, IngestReport> append_renewables(
    std::vector<MatchedRecord> matched, const csv::Table& renewables,
    const SourceDescriptor& desc, const std::set<std::string>& scope) {
  IngestReport report;
  report.source_id = desc.source_id;

  auto column = [&](const std::string& field) -> std::optional<std::size_t> {
    auto mapped = desc.column_map.find(field);
    if (mapped == desc.column_map.end()) return std::nullopt;
    return renewables.column(mapped->second);
  };
  auto name_col = column("name");
  auto term_col = column("term");
  auto country_col = column("country");
  auto capacity_col = column("capacity");
  auto id_col = column("project_id");
  auto year_col = column("year");
  auto lat_col = column("lat");
  auto lon_col = column("lon");
  if (!term_col || !country_col || !capacity_col) {
    throw std::runtime_error("renewables: column map must cover term, country, capacity");
  }
  auto field = [](const csv::Row& row, std::optional<std::size_t> idx) -> std::string {
    if (!idx || *idx >= row.fields.size()) return {};
    return row.fields[*idx];
  };

  std::size_t row_number = 0;
  for (const csv::Row& row : renewables.rows()) {
    ++report.rows_read;
    ++row_number;

    std::optional<Decimal> capacity = Decimal::parse(field(row, capacity_col));
    Decimal parsed_capacity = capacity.value_or(Decimal{});
    report.capacity_read_mw += parsed_capacity;

    TermTriple triple;
    try {
      triple = translate_term(field(row, term_col), desc);
    } catch (const UnmappedTermError& e) {
      ++report.rows_rejected;
      ++report.reject_reasons[e.what()];
      report.capacity_rejected_mw += parsed_capacity;
      continue;
    }
    if (!capacity || !capacity->is_positive()) {
      ++report.rows_rejected;
      ++report.reject_reasons["missing or non-positive capacity"];
      continue;
    }
    std::string country = trim(field(row, country_col));
    if (auto fixed = desc.country_map.find(country); fixed != desc.country_map.end()) {
      country = fixed->second;
    }
    if (!scope.contains(country)) {
      ++report.rows_dropped_scope;
      report.capacity_dropped_mw += parsed_capacity;
      continue;
    }

    MatchedRecord record;
    record.name = trim(field(row, name_col));  // may stay blank
    record.fueltype = triple.fueltype;
    record.technology = triple.technology;
    record.set = triple.set;
    record.country = std::move(country);
    record.capacity_mw = *capacity;
    if (auto year = parse_int(field(row, year_col));
        year && *year >= 1900 && *year <= current_year()) {
      record.year_commissioned = year;
    }
    std::optional<double> lat = parse_double(field(row, lat_col));
    std::optional<double> lon = parse_double(field(row, lon_col));
    if (lat && lon && valid_coordinates(*lat, *lon)) {
      record.position = GeoPoint{*lat, *lon};
    }
    std::string project_id = trim(field(row, id_col));
    if (project_id.empty()) {
      project_id = "row" + std::to_string(row_number);
    }
    record.provenance[desc.source_id] = {project_id};
    record.winning_source = desc.source_id;

    ++report.rows_kept;
    report.total_capacity_mw += record.capacity_mw;
    matched.push_back(std::move(record));
  }
  return {std::move(matched), std::move(report)};
}

}  // namespace fleetmatch
