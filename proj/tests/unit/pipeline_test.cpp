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

#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "fleetmatch/fixture.hpp"
#include "fleetmatch/rescale.hpp"
#include "fleetmatch/snapshots.hpp"
#include "test_util.hpp"

using namespace fleetmatch;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

nlohmann::json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("clean two-source corpus matches perfectly end to end") {
  testutil::TempDir dir("pipeline_clean");
  FixtureSpec spec = FixtureSpec::clean(25, 2, 5);
  auto summary = make_fixture(spec, dir.path());

  PipelineConfig config = PipelineConfig::load(summary.config_path);
  Pipeline pipeline(config, 1);
  pipeline.run_all();

  auto validation = load_json(config.output_dir / "validation.json");
  CHECK(validation["precision"].get<double>() == 1.0);
  CHECK(validation["recall"].get<double>() == 1.0);
  CHECK(validation["wrong"].get<int>() == 0);

  auto matched = snapshots::read_matched(config.output_dir / "matched.csv");
  CHECK(matched.size() == 25);
  for (const MatchedRecord& record : matched) {
    CHECK(record.n_sources() == 2);
  }
}

TEST_CASE("staged runs reproduce the single run byte for byte") {
  testutil::TempDir dir("pipeline_staged");
  FixtureSpec spec = FixtureSpec::generic(40, 3, 17);
  auto summary = make_fixture(spec, dir.path());

  PipelineConfig config = PipelineConfig::load(summary.config_path);
  config.output_dir = dir.path() / "out_a";
  Pipeline(config, 1).run_all();

  PipelineConfig config_b = PipelineConfig::load(summary.config_path);
  config_b.output_dir = dir.path() / "out_b";
  Pipeline staged(config_b, 1);
  staged.run_ingest();
  staged.run_aggregate();
  staged.run_match();
  staged.run_reduce();
  staged.run_report();
  staged.run_validate();

  for (const char* file : {"matched.csv", "links.csv", "chains.json", "validation.json"}) {
    INFO(file);
    CHECK(slurp(dir.path() / "out_a" / file) == slurp(dir.path() / "out_b" / file));
  }
  CHECK(slurp(dir.path() / "out_a" / "report" / "summary.json") ==
        slurp(dir.path() / "out_b" / "report" / "summary.json"));
}

TEST_CASE("factor table and links round-trip through their CSV forms") {
  testutil::TempDir dir("pipeline_roundtrip");

  std::vector<CapacityPair> pairs = {
      {FuelType::NaturalGas, Technology::CCGT, 88.7, 100.0},
      {FuelType::NaturalGas, Technology::CCGT, 91.3, 100.0},
      {FuelType::Hydro, Technology::Reservoir, 96.0, 100.0},
  };
  auto factors = estimate_factors(pairs);
  snapshots::write_factors(dir.path() / "factors.csv", factors);
  auto reloaded = snapshots::read_factors(dir.path() / "factors.csv");
  REQUIRE(reloaded.size() == factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    CHECK(reloaded[i].fueltype == factors[i].fueltype);
    CHECK(reloaded[i].technology == factors[i].technology);
    CHECK(reloaded[i].mean_ratio == factors[i].mean_ratio);  // bit exact
    CHECK(reloaded[i].median_ratio == factors[i].median_ratio);
    CHECK(reloaded[i].q1 == factors[i].q1);
    CHECK(reloaded[i].q3 == factors[i].q3);
    CHECK(reloaded[i].n_samples == factors[i].n_samples);
  }

  std::vector<DatasetLink> links = {{"A", 3, "B", 7, 0.98123456789},
                                    {"A", 4, "C", 1, 0.9987654321}};
  snapshots::write_links(dir.path() / "links.csv", links);
  auto relinked = snapshots::read_links(dir.path() / "links.csv");
  REQUIRE(relinked.size() == 2);
  CHECK(relinked[0].plant_b == 7);
  CHECK(relinked[0].posterior == links[0].posterior);
  CHECK(relinked[1].source_b == "C");
}

TEST_CASE("snapshots round-trip exactly") {
  testutil::TempDir dir("pipeline_snapshots");
  FixtureWorld world = build_world(FixtureSpec::generic(30, 1, 23));
  const auto& units = world.source_units[0];

  auto path = dir.path() / "units.csv";
  snapshots::write_units(path, units);
  auto loaded = snapshots::read_units(path, StopTokens::defaults());
  REQUIRE(loaded.size() == units.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    CHECK(loaded[i].name == units[i].name);
    CHECK(loaded[i].capacity_mw == units[i].capacity_mw);
    CHECK(loaded[i].fueltype == units[i].fueltype);
    CHECK(loaded[i].year_commissioned == units[i].year_commissioned);
    CHECK(loaded[i].position.has_value() == units[i].position.has_value());
    if (loaded[i].position) {
      CHECK(loaded[i].position->lat == units[i].position->lat);  // bit exact
      CHECK(loaded[i].position->lon == units[i].position->lon);
    }
    CHECK(loaded[i].name_key.canonical == units[i].name_key.canonical);
  }
}

TEST_CASE("config validation rejects broken files") {
  testutil::TempDir dir("pipeline_config");

  SUBCASE("missing scores for a source") {
    auto path = testutil::write_file(dir.path(), "config.json", R"({
      "schema_version": 1,
      "scope": ["Germany"],
      "sources": [{"id": "A", "path": "a.csv",
                   "columns": {"name": "n", "term": "t", "country": "c",
                               "capacity": "mw", "project_id": "id"},
                   "terms": {"gas": ["Natural Gas", "Unknown", "PP"]}}],
      "scores": {},
      "similarity": {
        "aggregation": {"threshold": 0.985, "fields": {"name": {"low": 0.1, "high": 0.9}}},
        "linkage": {"threshold": 0.95, "fields": {"name": {"low": 0.1, "high": 0.9}}}}
    })");
    CHECK_THROWS_AS(PipelineConfig::load(path), ConfigError);
  }

  SUBCASE("unsupported schema version") {
    auto path = testutil::write_file(dir.path(), "config.json",
                                     R"({"schema_version": 99})");
    CHECK_THROWS_AS(PipelineConfig::load(path), ConfigError);
  }

  SUBCASE("inverted anchors") {
    auto path = testutil::write_file(dir.path(), "config.json", R"({
      "schema_version": 1,
      "scope": ["Germany"],
      "sources": [{"id": "A", "path": "a.csv",
                   "columns": {"name": "n", "term": "t", "country": "c",
                               "capacity": "mw", "project_id": "id"},
                   "terms": {"gas": ["Natural Gas", "Unknown", "PP"]}}],
      "scores": {"A": 3},
      "similarity": {
        "aggregation": {"threshold": 0.985, "fields": {"name": {"low": 0.6, "high": 0.5}}},
        "linkage": {"threshold": 0.95, "fields": {"name": {"low": 0.1, "high": 0.9}}}}
    })");
    CHECK_THROWS_AS(PipelineConfig::load(path), ConfigError);
  }
}

TEST_CASE("a config without statistics skips the comparison with a notice") {
  testutil::TempDir dir("pipeline_no_stats");
  FixtureSpec spec = FixtureSpec::clean(8, 2, 9);
  auto summary = make_fixture(spec, dir.path());
  PipelineConfig config = PipelineConfig::load(summary.config_path);
  config.statistics_path.reset();
  Pipeline pipeline(config, 1);
  pipeline.run_all();

  auto report = load_json(config.output_dir / "report" / "summary.json");
  CHECK(report["overall_ratio"].is_null());
  CHECK(report["records"].get<int>() == 8);
}

TEST_CASE("stage errors carry the stage name") {
  testutil::TempDir dir("pipeline_stage_error");
  FixtureSpec spec = FixtureSpec::clean(5, 2, 3);
  auto summary = make_fixture(spec, dir.path());
  PipelineConfig config = PipelineConfig::load(summary.config_path);
  config.sources[0].path = dir.path() / "missing.csv";
  Pipeline pipeline(config, 1);
  try {
    pipeline.run_ingest();
    FAIL("expected StageError");
  } catch (const StageError& e) {
    CHECK(e.stage() == "ingest");
  }
}
