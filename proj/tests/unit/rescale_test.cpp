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

#include "fleetmatch/rescale.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>

#include <doctest.h>

#include "test_util.hpp"

using namespace fleetmatch;

TEST_CASE("quantile by linear interpolation") {
  std::vector<double> four = {0.40, 0.88, 0.90, 0.92};
  CHECK(quantile_linear(four, 0.5) == doctest::Approx(0.89));
  CHECK(quantile_linear(four, 0.25) == doctest::Approx(0.76));   // 0.40 + 0.75*0.48
  CHECK(quantile_linear(four, 0.75) == doctest::Approx(0.905));  // 0.90 + 0.25*0.02
  CHECK(quantile_linear(std::vector<double>{5.0}, 0.25) == 5.0);
}

TEST_CASE("outlier detection worked examples") {
  // Q1 = Q3 = 1, IQR 0, bounds collapse to [1, 1]
  std::vector<bool> flags = detect_outliers(std::vector<double>{1, 1, 1, 1, 10});
  CHECK(flags == std::vector<bool>{false, false, false, false, true});

  flags = detect_outliers(std::vector<double>{0.88, 0.89, 0.90, 0.91});
  CHECK(std::none_of(flags.begin(), flags.end(), [](bool f) { return f; }));

  flags = detect_outliers(std::vector<double>{5.0});
  CHECK(flags == std::vector<bool>{false});
}

TEST_CASE("outlier flags follow values, not positions") {
  std::mt19937_64 rng(11);
  std::vector<double> values = {0.9, 0.91, 0.88, 0.92, 0.4, 0.89, 1.7, 0.9, 0.87};
  std::vector<bool> base = detect_outliers(values);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<double> shuffled;
    for (std::size_t i : order) shuffled.push_back(values[i]);
    std::vector<bool> flags = detect_outliers(shuffled);
    for (std::size_t i = 0; i < order.size(); ++i) {
      CHECK(flags[i] == base[order[i]]);
    }
  }
}

TEST_CASE("factor estimation worked examples") {
  SUBCASE("constant ratios give the constant back") {
    std::vector<CapacityPair> pairs;
    for (int i = 0; i < 3; ++i) {
      pairs.push_back({FuelType::Nuclear, Technology::SteamTurbine, 90.0, 100.0});
    }
    auto factors = estimate_factors(pairs);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].mean_ratio == 0.9);
    CHECK(factors[0].n_samples == 3);
    CHECK(factors[0].outlier_ratios.empty());
  }

  SUBCASE("the outlier is flagged but stays in the mean") {
    std::vector<CapacityPair> pairs = {
        {FuelType::NaturalGas, Technology::CCGT, 90.0, 100.0},
        {FuelType::NaturalGas, Technology::CCGT, 92.0, 100.0},
        {FuelType::NaturalGas, Technology::CCGT, 88.0, 100.0},
        {FuelType::NaturalGas, Technology::CCGT, 40.0, 100.0},
    };
    auto factors = estimate_factors(pairs);
    REQUIRE(factors.size() == 1);
    CHECK(factors[0].mean_ratio == doctest::Approx(0.775).epsilon(1e-12));
    CHECK(factors[0].median_ratio == doctest::Approx(0.89));
    CHECK(factors[0].q1 <= factors[0].median_ratio);
    CHECK(factors[0].median_ratio <= factors[0].q3);
    REQUIRE(factors[0].outlier_ratios.size() == 1);
    CHECK(factors[0].outlier_ratios[0] == doctest::Approx(0.4));
  }

  SUBCASE("non-positive pairs are skipped, empty input gives an empty table") {
    CHECK(estimate_factors(std::vector<CapacityPair>{}).empty());
    std::vector<CapacityPair> bad = {{FuelType::Oil, Technology::SteamTurbine, 0.0, 10.0},
                                     {FuelType::Oil, Technology::SteamTurbine, 10.0, -1.0}};
    CHECK(estimate_factors(bad).empty());
  }
}

TEST_CASE("reference-style corpus: medians sit near 0.9, one mean dips below") {
  // several well-behaved groups plus one group whose industrial-owner
  // outliers drag the mean down while the median stays put
  std::mt19937_64 rng(2016);
  std::vector<CapacityPair> corpus;
  auto add_group = [&](FuelType fuel, Technology tech, double center, int n) {
    for (int i = 0; i < n; ++i) {
      double ratio = center + (static_cast<double>(rng() % 41) - 20.0) / 1000.0;
      double gross = 50.0 + static_cast<double>(rng() % 5000) / 10.0;
      corpus.push_back({fuel, tech, gross * ratio, gross});
    }
  };
  add_group(FuelType::Nuclear, Technology::SteamTurbine, 0.93, 10);
  add_group(FuelType::HardCoal, Technology::SteamTurbine, 0.90, 14);
  add_group(FuelType::Lignite, Technology::SteamTurbine, 0.89, 12);
  add_group(FuelType::Hydro, Technology::RunOfRiver, 0.95, 8);
  add_group(FuelType::NaturalGas, Technology::CCGT, 0.91, 16);
  // the CCGT outliers: tiny net capacities against full boiler gross
  for (double ratio : {0.30, 0.35, 0.25}) {
    corpus.push_back({FuelType::NaturalGas, Technology::CCGT, 100.0 * ratio, 100.0});
  }

  auto factors = estimate_factors(corpus);
  REQUIRE(factors.size() == 5);
  std::size_t means_below = 0;
  for (const RescaleFactor& f : factors) {
    CHECK(f.median_ratio > 0.85);
    CHECK(f.median_ratio < 1.0);
    if (f.mean_ratio < 0.85) {
      ++means_below;
      CHECK(f.fueltype == FuelType::NaturalGas);
      CHECK(!f.outlier_ratios.empty());  // the dip is explained by outliers
    }
  }
  CHECK(means_below == 1);
}

TEST_CASE("factor application and fallback chain") {
  std::vector<RescaleFactor> factors;
  RescaleFactor exact;
  exact.fueltype = FuelType::NaturalGas;
  exact.technology = Technology::CCGT;
  exact.mean_ratio = 0.85;
  exact.n_samples = 4;
  factors.push_back(exact);
  RescaleFactor fuel_level;
  fuel_level.fueltype = FuelType::NaturalGas;
  fuel_level.technology = Technology::OCGT;
  fuel_level.mean_ratio = 0.95;
  fuel_level.n_samples = 4;
  factors.push_back(fuel_level);
  FactorTable table(factors, 0.9);

  SUBCASE("rule of thumb: 100 MW gross at 0.9 becomes 90 MW net") {
    auto unit = testutil::make_unit("X", "Germany", FuelType::Hydro, 100.0);
    unit.technology = Technology::Reservoir;
    CHECK(apply_factor(unit, table).capacity_mw == *Decimal::parse("90"));
  }

  SUBCASE("exact match beats the fuel-level mean") {
    auto unit = testutil::make_unit("X", "Germany", FuelType::NaturalGas, 100.0);
    unit.technology = Technology::CCGT;
    CHECK(apply_factor(unit, table).capacity_mw == *Decimal::parse("85"));
  }

  SUBCASE("fuel-level fallback pools the fuel's groups") {
    auto unit = testutil::make_unit("X", "Germany", FuelType::NaturalGas, 100.0);
    unit.technology = Technology::SteamTurbine;  // no exact factor
    CHECK(apply_factor(unit, table).capacity_mw == *Decimal::parse("90"));  // (0.85+0.95)/2
  }

  SUBCASE("a mean above one is clamped on application") {
    RescaleFactor inflated;
    inflated.fueltype = FuelType::Oil;
    inflated.technology = Technology::SteamTurbine;
    inflated.mean_ratio = 1.1;
    inflated.n_samples = 2;
    FactorTable t({inflated}, 0.9);
    auto unit = testutil::make_unit("X", "Germany", FuelType::Oil, 100.0);
    unit.technology = Technology::SteamTurbine;
    CHECK(apply_factor(unit, t).capacity_mw == *Decimal::parse("100"));
  }
}

TEST_CASE("apply_factor is homogeneous in the capacity") {
  RescaleFactor f;
  f.fueltype = FuelType::HardCoal;
  f.technology = Technology::SteamTurbine;
  f.mean_ratio = 0.87;
  f.n_samples = 3;
  FactorTable table({f}, 0.9);
  for (double base : {1.0, 12.5, 640.0}) {
    auto unit = testutil::make_unit("X", "Germany", FuelType::HardCoal, base);
    unit.technology = Technology::SteamTurbine;
    auto scaled_then = apply_factor(unit, table).capacity_mw;
    auto unit10 = testutil::make_unit("X", "Germany", FuelType::HardCoal, base * 10.0);
    unit10.technology = Technology::SteamTurbine;
    auto then_scaled = apply_factor(unit10, table).capacity_mw;
    // rounding grid allows a few micro-MW of slack at 10x
    CHECK(std::abs(then_scaled.micro() - 10 * scaled_then.micro()) <= 10);
  }
}

TEST_CASE("an implausible mean ratio is rejected") {
  std::vector<CapacityPair> pairs = {{FuelType::Oil, Technology::SteamTurbine, 200.0, 100.0},
                                     {FuelType::Oil, Technology::SteamTurbine, 190.0, 100.0}};
  CHECK_THROWS(estimate_factors(pairs));
}
