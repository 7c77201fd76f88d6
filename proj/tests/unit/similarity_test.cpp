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

#include "fleetmatch/similarity.hpp"

#include <algorithm>
#include <random>

#include <doctest.h>

#include "test_util.hpp"

using namespace fleetmatch;
using testutil::make_unit;

TEST_CASE("edit distance basics") {
  CHECK(edit_distance("", "") == 0);
  CHECK(edit_distance("abc", "abc") == 0);
  CHECK(edit_distance("abc", "abd") == 1);
  CHECK(edit_distance("bouchain 7", "bouchain") == 2);
  CHECK(edit_distance("kitten", "sitting") == 3);
}

TEST_CASE("name comparison worked examples") {
  CHECK(compare_names("gersteinwerk", "gersteinwerk") == 1.0);

  // numbered block against the bare plant name stays a near-match
  double block = compare_names("bouchain 7", "bouchain");
  CHECK(block >= 0.8);

  // unrelated names score low
  CHECK(compare_names("belchatow", "maasvlakte") <= 0.3);

  // word reordering survives through the token set
  CHECK(compare_names("maasvlakte centrale 2", "2 centrale maasvlakte") == 1.0);

  CHECK(compare_names("", "anything") == 0.0);
}

TEST_CASE("name comparison is symmetric") {
  std::vector<std::string> names = {"bouchain 7", "bouchain", "gersteinwerk f",
                                    "maasvlakte", "belchatow 2", "emsland b"};
  for (const auto& a : names) {
    for (const auto& b : names) {
      CHECK(compare_names(a, b) == compare_names(b, a));
    }
  }
}

TEST_CASE("geo score falls linearly and clamps at zero") {
  GeoPoint cologne{50.9375, 6.9603};
  CHECK(compare_geo(cologne, cologne, 50.0) == 1.0);

  // a quarter of the great circle is ~10007.5 km, far past any cutoff
  CHECK(haversine_km({0.0, 0.0}, {90.0, 0.0}) == doctest::Approx(10007.543398));
  CHECK(compare_geo({0.0, 0.0}, {0.0, 90.0}, 50.0) == 0.0);

  // ~one degree of latitude is ~111.2 km
  CHECK(haversine_km({50.0, 6.0}, {51.0, 6.0}) == doctest::Approx(111.195).epsilon(1e-3));
  CHECK(compare_geo({50.0, 6.0}, {50.09, 6.0}, 50.0) ==
        doctest::Approx(1.0 - haversine_km({50.0, 6.0}, {50.09, 6.0}) / 50.0));
}

TEST_CASE("field probability maps anchors and midpoint") {
  FieldSpec spec{FieldKind::Name, 0.1, 0.9, 0.0};
  CHECK(field_probability(0.0, spec) == doctest::Approx(0.1));
  CHECK(field_probability(1.0, spec) == doctest::Approx(0.9));
  FieldSpec mid{FieldKind::Name, 0.2, 0.8, 0.0};
  CHECK(field_probability(0.5, mid) == doctest::Approx(0.5));

  // clamped away from the extremes
  FieldSpec tight{FieldKind::Name, 1e-9, 1.0 - 1e-12, 0.0};
  CHECK(field_probability(0.0, tight) == kProbEpsilon);
  CHECK(field_probability(1.0, tight) == 1.0 - kProbEpsilon);
}

TEST_CASE("combine_bayes worked examples") {
  CHECK(combine_bayes(std::vector<double>{0.5, 0.5}) == 0.5);
  CHECK(combine_bayes(std::vector<double>{0.9, 0.9}) ==
        doctest::Approx(0.81 / 0.82).epsilon(1e-13));
  CHECK(combine_bayes(std::vector<double>{0.9, 0.1}) == 0.5);  // exact
  CHECK(combine_bayes(std::vector<double>{0.7}) == 0.7);       // single field identity
  CHECK(combine_bayes(std::vector<double>{}) == 0.5);          // prior only
}

TEST_CASE("combine_bayes properties on random vectors") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> prob(kProbEpsilon, 1.0 - kProbEpsilon);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t n = 1 + rng() % 6;
    std::vector<double> probs(n);
    for (double& p : probs) p = prob(rng);

    double posterior = combine_bayes(probs);
    CHECK(posterior > 0.0);
    CHECK(posterior < 1.0);

    // exact permutation invariance
    std::vector<double> shuffled = probs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(combine_bayes(shuffled) == posterior);

    // exact neutral element
    std::vector<double> with_neutral = probs;
    with_neutral.push_back(0.5);
    CHECK(combine_bayes(with_neutral) == posterior);

    // monotonicity: raising one probability cannot lower the posterior
    std::vector<double> raised = probs;
    std::size_t k = rng() % n;
    raised[k] = raised[k] + (1.0 - kProbEpsilon - raised[k]) * prob(rng);
    CHECK(combine_bayes(raised) >= posterior - 1e-15);
  }
}

TEST_CASE("record similarity composes the evidence") {
  SimilarityConfig cfg = SimilarityConfig::aggregation_defaults();
  GeoPoint at{51.0, 7.0};

  SUBCASE("a record against itself clears the threshold") {
    UnitRecord a = make_unit("Gersteinwerk", "Germany", FuelType::NaturalGas, 100, at);
    CHECK(record_similarity(a, a, cfg) >= cfg.threshold);
  }

  SUBCASE("different countries short-circuit to zero") {
    UnitRecord a = make_unit("Gersteinwerk", "Germany", FuelType::NaturalGas, 100, at);
    UnitRecord b = make_unit("Gersteinwerk", "France", FuelType::NaturalGas, 100, at);
    CHECK(record_similarity(a, b, cfg) == 0.0);
  }

  SUBCASE("fuel retrofit with identical name and position still matches") {
    UnitRecord coal = make_unit("Gersteinwerk", "Germany", FuelType::HardCoal, 100, at);
    UnitRecord gas = make_unit("Gersteinwerk", "Germany", FuelType::NaturalGas, 100, at);
    CHECK(record_similarity(coal, gas, cfg) > cfg.threshold);
  }

  SUBCASE("missing coordinates contribute neutral evidence") {
    UnitRecord a = make_unit("Emsland", "Germany", FuelType::NaturalGas, 100, at);
    UnitRecord b = make_unit("Emsland", "Germany", FuelType::NaturalGas, 100);
    UnitRecord c = make_unit("Emsland", "Germany", FuelType::NaturalGas, 100);

    // with one side missing, the posterior equals the no-geo-field posterior
    SimilarityConfig no_geo = cfg;
    no_geo.fields.erase(
        std::remove_if(no_geo.fields.begin(), no_geo.fields.end(),
                       [](const FieldSpec& f) { return f.field == FieldKind::Geoposition; }),
        no_geo.fields.end());
    CHECK(record_similarity(a, b, cfg) == record_similarity(a, b, no_geo));
    CHECK(record_similarity(b, c, cfg) == record_similarity(b, c, no_geo));
  }

  SUBCASE("symmetry is exact") {
    std::mt19937_64 rng(3);
    std::vector<std::string> names = {"Nordbach", "Nordbach 2", "Seefeld",
                                      "Kraftwerk Seefeld", "Altdorf B"};
    for (int trial = 0; trial < 200; ++trial) {
      auto pick_name = [&] { return names[rng() % names.size()]; };
      auto pick_geo = [&]() -> std::optional<GeoPoint> {
        if (rng() % 4 == 0) return std::nullopt;
        return GeoPoint{48.0 + static_cast<double>(rng() % 1000) / 250.0,
                        6.0 + static_cast<double>(rng() % 1000) / 200.0};
      };
      UnitRecord a = make_unit(pick_name(), "Germany",
                               rng() % 2 ? FuelType::HardCoal : FuelType::NaturalGas, 50,
                               pick_geo());
      UnitRecord b = make_unit(pick_name(), "Germany",
                               rng() % 2 ? FuelType::HardCoal : FuelType::NaturalGas, 50,
                               pick_geo());
      CHECK(record_similarity(a, b, cfg) == record_similarity(b, a, cfg));
    }
  }
}
