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

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fleetmatch/config.hpp"
#include "fleetmatch/fixture.hpp"
#include "fleetmatch/pipeline.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  unsigned workers = 1;
  std::string output_override;
};

fleetmatch::Pipeline make_pipeline(const CommonOptions& opts) {
  auto config = fleetmatch::PipelineConfig::load(opts.config_path);
  if (!opts.output_override.empty()) {
    config.output_dir = opts.output_override;
  }
  return fleetmatch::Pipeline(std::move(config), opts.workers);
}

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config_path, "Pipeline config file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--workers", opts.workers, "Worker threads for pair scoring")
      ->default_val(1u);
  cmd->add_option("--output", opts.output_override, "Override the output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fleetmatch - deterministic record linkage for power plant registries"};
  app.require_subcommand(1);

  CommonOptions opts;
  void (fleetmatch::Pipeline::*stage_fn)() = nullptr;

  auto add_stage = [&](const char* name, const char* help,
                       void (fleetmatch::Pipeline::*fn)()) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_common(cmd, opts);
    cmd->callback([&stage_fn, fn] { stage_fn = fn; });
    return cmd;
  };

  add_stage("run", "Execute the whole pipeline", &fleetmatch::Pipeline::run_all);
  add_stage("ingest", "Standardize the raw source files", &fleetmatch::Pipeline::run_ingest);
  add_stage("aggregate", "Cluster units into plants per source",
            &fleetmatch::Pipeline::run_aggregate);
  add_stage("match", "Link plants across sources and join chains",
            &fleetmatch::Pipeline::run_match);
  add_stage("reduce", "Collapse chains into the final dataset",
            &fleetmatch::Pipeline::run_reduce);
  add_stage("report", "Emit capacity tables and quality reports",
            &fleetmatch::Pipeline::run_report);
  add_stage("validate", "Score found links against the truth file",
            &fleetmatch::Pipeline::run_validate);

  // Fixture generation has its own options.
  CLI::App* fixture = app.add_subcommand("fixture", "Generate a synthetic corpus");
  std::string spec_path;
  std::string fixture_out = "fixture";
  std::uint64_t seed = 0;
  std::size_t n_plants = 0;
  std::size_t n_sources = 2;
  bool clean = false;
  fixture->add_option("--spec", spec_path, "Fixture spec JSON (overrides the flags below)")
      ->check(CLI::ExistingFile);
  fixture->add_option("--out", fixture_out, "Fixture output directory")->required();
  fixture->add_option("--seed", seed, "Seed override");
  fixture->add_option("--plants", n_plants, "Plant count (without --spec)");
  fixture->add_option("--sources", n_sources, "Source count (without --spec)");
  fixture->add_flag("--clean", clean, "Zero perturbation (without --spec)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fixture->parsed()) {
      fleetmatch::FixtureSpec spec;
      if (!spec_path.empty()) {
        spec = fleetmatch::FixtureSpec::from_json_file(spec_path);
      } else {
        std::size_t plants = n_plants == 0 ? 100 : n_plants;
        spec = clean ? fleetmatch::FixtureSpec::clean(plants, n_sources, 1)
                     : fleetmatch::FixtureSpec::generic(plants, n_sources, 1);
      }
      if (seed != 0) spec.seed = seed;
      if (n_plants != 0 && !spec_path.empty()) spec.n_plants = n_plants;

      auto summary = fleetmatch::make_fixture(spec, fixture_out);
      std::cout << "fixture: " << summary.n_plants << " plants, "
                << summary.truth_unit_links << " truth links\n";
      for (const auto& [source_id, rows] : summary.rows_per_source) {
        std::cout << "  " << source_id << ": " << rows << " rows\n";
      }
      std::cout << "config: " << summary.config_path.string() << "\n";
      return 0;
    }

    fleetmatch::Pipeline pipeline = make_pipeline(opts);
    (pipeline.*stage_fn)();
    return 0;
  } catch (const fleetmatch::StageError& e) {
    std::cerr << "fleetmatch: stage '" << e.stage() << "' failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "fleetmatch: " << e.what() << "\n";
    return 1;
  }
}
