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

#include "fleetmatch/report.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace fleetmatch {

std::optional<FuelType> remap_statistics_category(std::string_view category) {
  if (auto direct = parse_fueltype(category)) return direct;
  if (category == "Bioenergy and other renewable fuels") return FuelType::Bioenergy;
  if (category == "Bioenergy and renewable waste") return FuelType::Waste;
  if (category == "Differently categorized fossil fuels" ||
      category == "Differently categorized renewable energy sources" ||
      category == "Mixed fossil fuels" ||
      category == "Other or unspecified energy sources" ||
      category == "Tide, wave, and ocean") {
    return FuelType::Other;
  }
  return std::nullopt;
}

std::map<std::string, Decimal> group_capacity(std::span<const MatchedRecord> records,
                                              GroupBy by) {
  std::map<std::string, Decimal> table;
  for (const MatchedRecord& record : records) {
    std::string key;
    switch (by) {
      case GroupBy::Fueltype:
        key = std::string(to_string(record.fueltype));
        break;
      case GroupBy::Country:
        key = record.country;
        break;
      case GroupBy::Both:
        key = record.country + "|" + std::string(to_string(record.fueltype));
        break;
    }
    table[key] += record.capacity_mw;
  }
  return table;
}

ComparisonTable compare_to_statistics(std::span<const MatchedRecord> records,
                                      std::span<const StatisticsRow> stats,
                                      const std::set<std::string>& scope) {
  ComparisonTable out;

  std::map<std::pair<std::string, FuelType>, Decimal> matched;
  for (const MatchedRecord& record : records) {
    matched[{record.country, record.fueltype}] += record.capacity_mw;
  }

  std::map<std::pair<std::string, FuelType>, Decimal> reference;
  for (const StatisticsRow& row : stats) {
    if (!scope.contains(row.country)) {
      out.warnings.push_back("statistics row for '" + row.country +
                             "' is outside the configured scope, ignored");
      continue;
    }
    reference[{row.country, row.fueltype}] += row.capacity_mw;
  }

  std::set<std::pair<std::string, FuelType>> keys;
  for (const auto& [key, value] : matched) keys.insert(key);
  for (const auto& [key, value] : reference) keys.insert(key);

  for (const auto& key : keys) {
    ComparisonRow row;
    row.country = key.first;
    row.fueltype = key.second;
    if (auto it = matched.find(key); it != matched.end()) row.matched_mw = it->second;
    if (auto it = reference.find(key); it != reference.end()) row.statistics_mw = it->second;
    row.deviation_mw = row.matched_mw - row.statistics_mw;
    out.total_matched_mw += row.matched_mw;
    out.total_statistics_mw += row.statistics_mw;
    out.rows.push_back(std::move(row));
  }

  out.overall_ratio = out.total_statistics_mw.is_zero()
                          ? 0.0
                          : out.total_matched_mw.to_double() /
                                out.total_statistics_mw.to_double();
  return out;
}

double country_r2(const std::map<std::string, Decimal>& x,
                  const std::map<std::string, Decimal>& y,
                  std::vector<std::string>* warnings) {
  for (const auto& [country, total] : x) {
    if (!y.count(country)) {
      throw std::invalid_argument("country_r2: country sets differ ('" + country + "')");
    }
  }
  if (x.size() != y.size()) {
    throw std::invalid_argument("country_r2: country sets differ in size");
  }

  std::vector<double> lx, ly;
  for (const auto& [country, total] : x) {
    const Decimal& other = y.at(country);
    if (!total.is_positive() || !other.is_positive()) {
      if (warnings) {
        warnings->push_back("country_r2: '" + country + "' has zero capacity, excluded");
      }
      continue;
    }
    lx.push_back(std::log10(total.to_double()));
    ly.push_back(std::log10(other.to_double()));
  }
  if (lx.size() < 2) {
    throw std::runtime_error("country_r2: need at least two countries with capacity");
  }

  double mean_ly = 0.0;
  for (double v : ly) mean_ly += v;
  mean_ly /= static_cast<double>(ly.size());

  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    ss_res += (ly[i] - lx[i]) * (ly[i] - lx[i]);  // residual from y = x
    ss_tot += (ly[i] - mean_ly) * (ly[i] - mean_ly);
  }
  if (ss_res == 0.0) return 1.0;
  if (ss_tot == 0.0) {
    throw std::runtime_error("country_r2: degenerate input, all totals equal");
  }
  return 1.0 - ss_res / ss_tot;
}

std::vector<YearCoverageRow> year_coverage(std::span<const MatchedRecord> records) {
  std::map<std::string, YearCoverageRow> by_country;
  for (const MatchedRecord& record : records) {
    YearCoverageRow& row = by_country[record.country];
    row.country = record.country;
    ++row.records_total;
    if (record.year_commissioned) ++row.records_with_year;
  }
  std::vector<YearCoverageRow> rows;
  rows.reserve(by_country.size());
  for (auto& [country, row] : by_country) {
    row.ratio = static_cast<double>(row.records_with_year) /
                static_cast<double>(row.records_total);
    row.ratio_percent = static_cast<int>(std::lround(row.ratio * 100.0));
    rows.push_back(std::move(row));
  }
  return rows;
}

ClaimLink ClaimLink::canonical() const {
  if (std::tie(source_a, id_a) <= std::tie(source_b, id_b)) return *this;
  return ClaimLink{source_b, id_b, source_a, id_a};
}

ValidationResult validate_links(std::span<const ClaimLink> found,
                                std::span<const ClaimLink> truth) {
  std::set<ClaimLink> found_set, truth_set;
  for (const ClaimLink& link : found) found_set.insert(link.canonical());
  for (const ClaimLink& link : truth) truth_set.insert(link.canonical());

  ValidationResult result;
  for (const ClaimLink& link : found_set) {
    if (truth_set.contains(link)) {
      ++result.correct;
    } else {
      ++result.wrong;
      result.wrong_links.push_back(link);
    }
  }
  for (const ClaimLink& link : truth_set) {
    if (!found_set.contains(link)) {
      ++result.missed;
      result.missed_links.push_back(link);
    }
  }
  result.precision = (result.correct + result.wrong) == 0
                         ? 1.0
                         : static_cast<double>(result.correct) /
                               static_cast<double>(result.correct + result.wrong);
  result.recall = (result.correct + result.missed) == 0
                      ? 1.0
                      : static_cast<double>(result.correct) /
                            static_cast<double>(result.correct + result.missed);
  return result;
}

}  // namespace fleetmatch
