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

#include <doctest.h>

using namespace fleetmatch;

namespace {

MatchedRecord record(const std::string& country, FuelType fuel, const char* capacity,
                     std::optional<int> year = std::nullopt) {
  MatchedRecord r;
  r.country = country;
  r.fueltype = fuel;
  r.capacity_mw = *Decimal::parse(capacity);
  r.year_commissioned = year;
  r.provenance = {{"A", {"a"}}, {"B", {"b"}}};
  r.winning_source = "A";
  return r;
}

}  // namespace

TEST_CASE("statistical category remapping") {
  CHECK(remap_statistics_category("Hydro") == FuelType::Hydro);
  CHECK(remap_statistics_category("Bioenergy and other renewable fuels") ==
        FuelType::Bioenergy);
  CHECK(remap_statistics_category("Bioenergy and renewable waste") == FuelType::Waste);
  CHECK(remap_statistics_category("Mixed fossil fuels") == FuelType::Other);
  CHECK(remap_statistics_category("Tide, wave, and ocean") == FuelType::Other);
  CHECK(!remap_statistics_category("Antimatter"));
}

TEST_CASE("grouped capacity sums exactly") {
  std::vector<MatchedRecord> records = {
      record("Poland", FuelType::Lignite, "5420"),
      record("Germany", FuelType::NaturalGas, "100.5"),
      record("Germany", FuelType::NaturalGas, "0.25"),
      record("Germany", FuelType::HardCoal, "300"),
  };
  auto by_fuel = group_capacity(records, GroupBy::Fueltype);
  CHECK(by_fuel.at("Lignite") == *Decimal::parse("5420"));
  CHECK(by_fuel.at("Natural Gas") == *Decimal::parse("100.75"));

  auto by_country = group_capacity(records, GroupBy::Country);
  CHECK(by_country.at("Germany") == *Decimal::parse("400.75"));

  // partition identity: country groups sum to the grand total
  Decimal total, grand;
  for (const auto& [key, mw] : by_country) total += mw;
  for (const auto& r : records) grand += r.capacity_mw;
  CHECK(total == grand);

  CHECK(group_capacity({}, GroupBy::Fueltype).empty());
}

TEST_CASE("statistics comparison reproduces the reference ratios") {
  // headline totals as single rows: ratio arithmetic must match
  std::vector<MatchedRecord> with_wepp = {record("Germany", FuelType::Other, "747410")};
  std::vector<StatisticsRow> stats = {{"Germany", FuelType::Other, *Decimal::parse("767970")}};
  auto cmp = compare_to_statistics(with_wepp, stats, {"Germany"});
  CHECK(cmp.overall_ratio * 100.0 == doctest::Approx(97.32).epsilon(1e-4));

  std::vector<MatchedRecord> without_wepp = {record("Germany", FuelType::Other, "707650")};
  cmp = compare_to_statistics(without_wepp, stats, {"Germany"});
  CHECK(cmp.overall_ratio * 100.0 == doctest::Approx(92.14).epsilon(1e-4));

  // exact match means ratio 1, all deviations zero
  std::vector<StatisticsRow> same = {{"Germany", FuelType::Other, *Decimal::parse("747410")}};
  cmp = compare_to_statistics(with_wepp, same, {"Germany"});
  CHECK(cmp.overall_ratio == doctest::Approx(1.0));
  for (const auto& row : cmp.rows) CHECK(row.deviation_mw.is_zero());

  // out-of-scope statistics rows warn and drop
  std::vector<StatisticsRow> with_extra = {{"Germany", FuelType::Other, *Decimal::parse("100")},
                                           {"Atlantis", FuelType::Other, *Decimal::parse("5")}};
  cmp = compare_to_statistics(with_wepp, with_extra, {"Germany"});
  CHECK(cmp.warnings.size() == 1);
  CHECK(cmp.total_statistics_mw == *Decimal::parse("100"));
}

TEST_CASE("country r2 against the identity line in log space") {
  std::map<std::string, Decimal> x = {{"DE", *Decimal::parse("100")},
                                      {"FR", *Decimal::parse("50")},
                                      {"PL", *Decimal::parse("25")}};

  SUBCASE("y = x is a perfect fit") { CHECK(country_r2(x, x) == 1.0); }

  SUBCASE("y = 2x is off the identity line") {
    std::map<std::string, Decimal> y;
    for (const auto& [country, mw] : x) y[country] = mw + mw;
    double r2 = country_r2(x, y);
    CHECK(r2 < 1.0);
    // hand value: residual log10(2)^2 per point, SS_tot from log10 y spread
    // log10 y: {2.301..., 2.0, 1.69897}, mean 2.0, SS_tot = 2*(0.30103)^2
    // SS_res = 3*(0.30103)^2  ->  r2 = 1 - 1.5
    CHECK(r2 == doctest::Approx(-0.5).epsilon(1e-9));
  }

  SUBCASE("single country or flat data errors out") {
    std::map<std::string, Decimal> one = {{"DE", *Decimal::parse("100")}};
    CHECK_THROWS(country_r2(one, one));

    std::map<std::string, Decimal> flat = {{"DE", *Decimal::parse("100")},
                                           {"FR", *Decimal::parse("100")}};
    std::map<std::string, Decimal> shifted = {{"DE", *Decimal::parse("200")},
                                              {"FR", *Decimal::parse("200")}};
    CHECK_THROWS(country_r2(flat, shifted));  // SS_tot 0 with nonzero residual
  }

  SUBCASE("zero capacity countries are excluded with a warning") {
    std::map<std::string, Decimal> with_zero = x;
    with_zero["MT"] = Decimal{};
    std::map<std::string, Decimal> y = x;
    y["MT"] = Decimal{};
    std::vector<std::string> warnings;
    CHECK(country_r2(with_zero, y, &warnings) == 1.0);
    CHECK(warnings.size() == 1);
  }

  SUBCASE("mismatched country sets error out") {
    std::map<std::string, Decimal> y = {{"DE", *Decimal::parse("100")}};
    CHECK_THROWS(country_r2(x, y));
  }
}

TEST_CASE("year coverage rows") {
  std::vector<MatchedRecord> records;
  for (int i = 0; i < 643; ++i) records.push_back(record("Austria", FuelType::Hydro, "1", 1990));
  for (int i = 0; i < 36; ++i) records.push_back(record("Austria", FuelType::Hydro, "1"));
  for (int i = 0; i < 41; ++i) records.push_back(record("Slovakia", FuelType::Hydro, "1", 1985));

  auto rows = year_coverage(records);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].country == "Austria");
  CHECK(rows[0].records_with_year == 643);
  CHECK(rows[0].records_total == 679);
  CHECK(rows[0].ratio_percent == 95);
  CHECK(rows[1].country == "Slovakia");
  CHECK(rows[1].ratio_percent == 100);

  CHECK(year_coverage({}).empty());
}

TEST_CASE("link validation set algebra") {
  auto link = [](const char* a, const char* ia, const char* b, const char* ib) {
    return ClaimLink{a, ia, b, ib};
  };

  SUBCASE("found within truth") {
    std::vector<ClaimLink> truth;
    for (int i = 0; i < 181; ++i) {
      truth.push_back(link("A", ("a" + std::to_string(i)).c_str(), "B",
                           ("b" + std::to_string(i)).c_str()));
    }
    std::vector<ClaimLink> found(truth.begin(), truth.begin() + 153);
    ValidationResult r = validate_links(found, truth);
    CHECK(r.correct == 153);
    CHECK(r.wrong == 0);
    CHECK(r.missed == 28);
    CHECK(r.precision == 1.0);
    CHECK(r.recall == doctest::Approx(153.0 / 181.0));
  }

  SUBCASE("perfect match") {
    std::vector<ClaimLink> truth = {link("A", "1", "B", "2")};
    ValidationResult r = validate_links(truth, truth);
    CHECK(r.precision == 1.0);
    CHECK(r.recall == 1.0);
  }

  SUBCASE("nothing found is vacuously precise") {
    std::vector<ClaimLink> truth = {link("A", "1", "B", "2")};
    ValidationResult r = validate_links({}, truth);
    CHECK(r.precision == 1.0);
    CHECK(r.recall == 0.0);
  }

  SUBCASE("endpoint order does not matter") {
    std::vector<ClaimLink> found = {link("B", "2", "A", "1")};
    std::vector<ClaimLink> truth = {link("A", "1", "B", "2")};
    ValidationResult r = validate_links(found, truth);
    CHECK(r.correct == 1);
  }

  SUBCASE("swapping found and truth swaps wrong and missed") {
    std::vector<ClaimLink> found = {link("A", "1", "B", "2"), link("A", "3", "B", "4")};
    std::vector<ClaimLink> truth = {link("A", "1", "B", "2"), link("A", "5", "B", "6")};
    ValidationResult forward = validate_links(found, truth);
    ValidationResult backward = validate_links(truth, found);
    CHECK(forward.correct == backward.correct);
    CHECK(forward.wrong == backward.missed);
    CHECK(forward.missed == backward.wrong);
  }
}
