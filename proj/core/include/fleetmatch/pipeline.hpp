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

#include <stdexcept>
#include <string>

#include "fleetmatch/config.hpp"

namespace fleetmatch {

/// Failure of one pipeline stage, carrying the stage name for the CLI.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& message)
      : std::runtime_error(message), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

/// Executes the staged batch pipeline. Every stage reads its inputs from the
/// snapshots of the previous stage and writes its own, so a full run and a
/// sequence of single-stage runs produce identical bytes.
///
/// Snapshot layout under config.output_dir:
///   units_<SOURCE>.csv, ingest_<SOURCE>.json, rescale_factors.csv,
///   plants_<SOURCE>.csv, links.csv, chains.json, matched.csv,
///   report/*.csv, report/summary.json, validation.json
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig config, unsigned workers = 1);

  void run_ingest();
  void run_aggregate();
  void run_match();
  void run_reduce();
  void run_report();
  void run_validate();

  /// ingest -> aggregate -> match -> reduce -> report (-> validate when a
  /// truth link file is configured).
  void run_all();

  const PipelineConfig& config() const { return config_; }

 private:
  PlantsBySource load_plants() const;

  PipelineConfig config_;
  unsigned workers_;
  StopTokens stops_;
};

}  // namespace fleetmatch
