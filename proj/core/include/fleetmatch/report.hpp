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
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fleetmatch/record.hpp"

namespace fleetmatch {

/// One row of the national capacity statistics used as reference.
struct StatisticsRow {
  std::string country;
  FuelType fueltype = FuelType::Other;
  Decimal capacity_mw;
};

/// Remaps an aggregated statistical fuel category onto the working
/// vocabulary ("Bioenergy and other renewable fuels" -> Bioenergy, the
/// mixed/unspecified aggregates -> Other, ...). Plain vocabulary names pass
/// through; unknown text returns nullopt.
std::optional<FuelType> remap_statistics_category(std::string_view category);

enum class GroupBy { Fueltype, Country, Both };

/// Exact capacity sums per group; empty groups are simply absent.
/// Keys: fuel type name, country, or "country|fuel type name".
std::map<std::string, Decimal> group_capacity(std::span<const MatchedRecord> records,
                                              GroupBy by);

struct ComparisonRow {
  std::string country;
  FuelType fueltype = FuelType::Other;
  Decimal matched_mw;
  Decimal statistics_mw;
  Decimal deviation_mw;  // matched - statistics
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  Decimal total_matched_mw;
  Decimal total_statistics_mw;
  double overall_ratio = 0.0;  // total matched / total statistics
  std::vector<std::string> warnings;
};

/// Per-(country, fuel type) comparison of the matched dataset against the
/// statistics, plus the overall ratio. Statistic rows for countries outside
/// the scope of the records are ignored with a warning.
ComparisonTable compare_to_statistics(std::span<const MatchedRecord> records,
                                      std::span<const StatisticsRow> stats,
                                      const std::set<std::string>& scope);

/// Coefficient of determination of log10(y) against log10(x) with residuals
/// measured from the identity line y = x. Both maps must cover the same
/// countries; zero-capacity countries are excluded (with a warning appended
/// when `warnings` is given). Throws when fewer than two countries remain or
/// the denominator degenerates.
double country_r2(const std::map<std::string, Decimal>& x,
                  const std::map<std::string, Decimal>& y,
                  std::vector<std::string>* warnings = nullptr);

struct YearCoverageRow {
  std::string country;
  std::size_t records_with_year = 0;
  std::size_t records_total = 0;
  double ratio = 0.0;      // full precision
  int ratio_percent = 0;   // rounded for display
};

/// Per-country share of records that carry a commissioning year. Countries
/// without records are omitted.
std::vector<YearCoverageRow> year_coverage(std::span<const MatchedRecord> records);

/// An undirected link between two source claims.
struct ClaimLink {
  std::string source_a;
  std::string id_a;
  std::string source_b;
  std::string id_b;

  /// Endpoint-order-independent canonical form.
  ClaimLink canonical() const;
  friend auto operator<=>(const ClaimLink&, const ClaimLink&) = default;
};

struct ValidationResult {
  std::size_t correct = 0;
  std::size_t wrong = 0;
  std::size_t missed = 0;
  double precision = 1.0;  // 1 when nothing was found
  double recall = 0.0;

  std::vector<ClaimLink> wrong_links;
  std::vector<ClaimLink> missed_links;
};

/// Set algebra over unordered link pairs: correct = found AND truth,
/// wrong = found \ truth, missed = truth \ found.
ValidationResult validate_links(std::span<const ClaimLink> found,
                                std::span<const ClaimLink> truth);

}  // namespace fleetmatch
