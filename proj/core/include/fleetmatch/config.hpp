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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fleetmatch/normalize.hpp"
#include "fleetmatch/record.hpp"
#include "fleetmatch/similarity.hpp"

namespace fleetmatch {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A source descriptor plus where to find its file.
struct SourceConfig {
  SourceDescriptor descriptor;
  std::filesystem::path path;
};

/// The whole pipeline configuration, loaded from a single JSON file
/// (schema_version 1). Relative paths are resolved against the config file's
/// directory.
struct PipelineConfig {
  int schema_version = 1;
  std::set<std::string> scope;  // country names
  std::vector<std::string> stop_tokens;  // empty -> built-in defaults
  std::vector<SourceConfig> sources;
  SimilarityConfig aggregation;
  SimilarityConfig linkage;
  std::map<std::string, int> scores;  // reliability per source id

  double rescale_default_factor = 0.9;
  std::optional<std::filesystem::path> paired_corpus_path;
  std::optional<std::filesystem::path> statistics_path;
  std::optional<std::filesystem::path> renewables_path;
  std::optional<SourceDescriptor> renewables_descriptor;
  std::optional<std::filesystem::path> truth_links_path;

  std::filesystem::path output_dir = "out";
  std::uint64_t seed = 1;

  static PipelineConfig load(const std::filesystem::path& path);

  /// Structural checks beyond parsing: every source has a score, anchors are
  /// ordered, thresholds in (0,1). Throws ConfigError.
  void validate() const;

  StopTokens make_stop_tokens() const;
};

}  // namespace fleetmatch
