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
#include <random>

#include <doctest.h>

#include "test_util.hpp"

using namespace fleetmatch;
using testutil::make_plant;

namespace {

PlantsBySource two_source_setup() {
  PlantsBySource plants;
  plants["OPSD"] = {make_plant("Bouchain", "France", FuelType::NaturalGas, 645.0,
                               GeoPoint{50.28, 3.31}, "OPSD", {"OEU123"})};
  plants["CARMA"] = {make_plant("Bouchain", "France", FuelType::NaturalGas, 700.0,
                                GeoPoint{50.3, 3.3}, "CARMA", {"C-77"})};
  return plants;
}

LinkChain chain_of(std::initializer_list<std::pair<std::string, std::size_t>> members) {
  LinkChain chain;
  for (const auto& [source, plant] : members) chain.members.emplace(source, plant);
  return chain;
}

}  // namespace

TEST_CASE("the most reliable source wins outright") {
  PlantsBySource plants = two_source_setup();
  ReliabilityScores scores = {{"OPSD", 5}, {"CARMA", 1}};
  MatchedRecord out = reduce_chain(chain_of({{"OPSD", 0}, {"CARMA", 0}}), plants, scores);
  CHECK(out.capacity_mw == *Decimal::parse("645"));
  CHECK(out.winning_source == "OPSD");
  CHECK(out.n_sources() == 2);
  CHECK(out.provenance.at("OPSD") == std::vector<std::string>{"OEU123"});
  CHECK(out.provenance.at("CARMA") == std::vector<std::string>{"C-77"});
}

TEST_CASE("tied top scores reduce to the median capacity") {
  PlantsBySource plants;
  plants["ENTSOE"] = {make_plant("Heyden", "Germany", FuelType::HardCoal, 100,
                                 GeoPoint{52.0, 9.0}, "ENTSOE", {"E-1"})};
  plants["ESE"] = {make_plant("Heyden", "Germany", FuelType::HardCoal, 110,
                              GeoPoint{52.1, 9.1}, "ESE", {"S-1"})};
  plants["WEPP"] = {make_plant("Heyden", "Germany", FuelType::HardCoal, 130, std::nullopt,
                               "WEPP", {"W-1"})};
  ReliabilityScores scores = {{"ENTSOE", 4}, {"ESE", 4}, {"WEPP", 4}};
  MatchedRecord out =
      reduce_chain(chain_of({{"ENTSOE", 0}, {"ESE", 0}, {"WEPP", 0}}), plants, scores);
  CHECK(out.capacity_mw == *Decimal::parse("110"));
  CHECK(out.winning_source == "tie");
  REQUIRE(out.position.has_value());
  CHECK(out.position->lat == doctest::Approx(52.05));  // mean of the two present
}

TEST_CASE("an even tie takes the mean of the middle capacities") {
  PlantsBySource plants;
  plants["A"] = {make_plant("X", "Germany", FuelType::Oil, 100, std::nullopt, "A", {"a"})};
  plants["B"] = {make_plant("X", "Germany", FuelType::Oil, 110, std::nullopt, "B", {"b"})};
  ReliabilityScores scores = {{"A", 2}, {"B", 2}};
  MatchedRecord out = reduce_chain(chain_of({{"A", 0}, {"B", 0}}), plants, scores);
  CHECK(out.capacity_mw == *Decimal::parse("105"));
}

TEST_CASE("missing year backfills from the most reliable provider") {
  PlantsBySource plants;
  auto winner = make_plant("Emsland", "Germany", FuelType::Nuclear, 1400,
                           GeoPoint{52.47, 7.32}, "OPSD", {"O-1"});
  auto other = make_plant("Emsland", "Germany", FuelType::Nuclear, 1390, std::nullopt,
                          "ENTSOE", {"E-9"});
  other.year_commissioned = 1995;
  plants["OPSD"] = {winner};
  plants["ENTSOE"] = {other};
  ReliabilityScores scores = {{"OPSD", 5}, {"ENTSOE", 4}};
  MatchedRecord out = reduce_chain(chain_of({{"OPSD", 0}, {"ENTSOE", 0}}), plants, scores);
  CHECK(out.capacity_mw == *Decimal::parse("1400"));  // winner claim
  CHECK(out.year_commissioned == 1995);               // backfilled
}

TEST_CASE("missing scores are a fatal configuration error") {
  PlantsBySource plants = two_source_setup();
  ReliabilityScores scores = {{"OPSD", 5}};
  CHECK_THROWS(reduce_chain(chain_of({{"OPSD", 0}, {"CARMA", 0}}), plants, scores));
}

TEST_CASE("reduce_all sorts by country then name") {
  PlantsBySource plants;
  plants["A"] = {make_plant("Zeta", "Germany", FuelType::Oil, 10, std::nullopt, "A", {"a1"}),
                 make_plant("Alpha", "Austria", FuelType::Oil, 20, std::nullopt, "A", {"a2"})};
  plants["B"] = {make_plant("Zeta", "Germany", FuelType::Oil, 12, std::nullopt, "B", {"b1"}),
                 make_plant("Alpha", "Austria", FuelType::Oil, 22, std::nullopt, "B", {"b2"})};
  ReliabilityScores scores = {{"A", 3}, {"B", 2}};
  std::vector<LinkChain> chains = {chain_of({{"A", 0}, {"B", 0}}),
                                   chain_of({{"A", 1}, {"B", 1}})};
  auto records = reduce_all(chains, plants, scores);
  REQUIRE(records.size() == 2);
  CHECK(records[0].country == "Austria");
  CHECK(records[1].country == "Germany");
  CHECK(reduce_all({}, plants, scores).empty());
}

TEST_CASE("reduction properties on random chains") {
  std::mt19937_64 rng(99);
  const std::vector<std::string> source_names = {"S1", "S2", "S3", "S4", "S5"};

  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 2 + rng() % 4;
    PlantsBySource plants;
    LinkChain chain;
    ReliabilityScores scores;
    Decimal lo = Decimal::from_micro(INT64_MAX), hi;
    for (std::size_t s = 0; s < n; ++s) {
      const std::string& source = source_names[s];
      double capacity = 10.0 + static_cast<double>(rng() % 10000) / 10.0;
      auto plant = make_plant("Plant " + std::to_string(1 + rng() % 3), "Germany",
                              rng() % 2 ? FuelType::HardCoal : FuelType::NaturalGas,
                              capacity, std::nullopt, source, {source + "-1"});
      if (rng() % 3 != 0) plant.year_commissioned = 1950 + static_cast<int>(rng() % 60);
      lo = std::min(lo, plant.capacity_mw);
      hi = std::max(hi, plant.capacity_mw);
      plants[source] = {plant};
      chain.members.emplace(source, 0);
      scores[source] = 1 + static_cast<int>(rng() % 5);
    }

    MatchedRecord out = reduce_chain(chain, plants, scores);

    // capacity stays inside the member range
    CHECK(out.capacity_mw >= lo);
    CHECK(out.capacity_mw <= hi);

    // provenance unions all members
    CHECK(out.n_sources() == n);

    // argmax invariance: scaling all scores changes nothing
    ReliabilityScores tripled;
    for (const auto& [source, score] : scores) tripled[source] = score * 3;
    MatchedRecord scaled = reduce_chain(chain, plants, tripled);
    CHECK(scaled.capacity_mw == out.capacity_mw);
    CHECK(scaled.name == out.name);
    CHECK(scaled.winning_source == out.winning_source);
    CHECK(scaled.year_commissioned == out.year_commissioned);

    // score dominance: push one member above everyone else
    const std::string& promoted = source_names[rng() % n];
    ReliabilityScores dominant = scores;
    dominant[promoted] = 100;
    MatchedRecord won = reduce_chain(chain, plants, dominant);
    const PlantRecord& claim = plants[promoted][0];
    CHECK(won.winning_source == promoted);
    CHECK(won.capacity_mw == claim.capacity_mw);
    CHECK(won.name == claim.name);
    if (claim.year_commissioned) {
      CHECK(won.year_commissioned == claim.year_commissioned);
    }
  }
}
