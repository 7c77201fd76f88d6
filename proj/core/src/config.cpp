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

#include "fleetmatch/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <json.hpp>

namespace fleetmatch {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw ConfigError("config: " + message); }

const json& require(const json& node, const char* key, const std::string& where) {
  auto it = node.find(key);
  if (it == node.end()) fail(where + ": missing required key '" + key + "'");
  return *it;
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

char parse_delimiter(const json& node, const std::string& where) {
  std::string d = node.value("delimiter", ",");
  if (d.size() != 1 || (d != "," && d != ";" && d != "\t")) {
    fail(where + ": delimiter must be ',', ';' or a tab");
  }
  return d[0];
}

TermTriple parse_triple(const json& node, const std::string& where) {
  if (!node.is_array() || node.size() != 3) {
    fail(where + ": term value must be [fueltype, technology, set]");
  }
  TermTriple triple;
  auto fuel = parse_fueltype(node[0].get<std::string>());
  if (!fuel) fail(where + ": unknown fueltype '" + node[0].get<std::string>() + "'");
  auto tech = parse_technology(node[1].get<std::string>());
  if (!tech) fail(where + ": unknown technology '" + node[1].get<std::string>() + "'");
  auto set = parse_settype(node[2].get<std::string>());
  if (!set) fail(where + ": unknown set '" + node[2].get<std::string>() + "'");
  triple.fueltype = *fuel;
  triple.technology = *tech;
  triple.set = *set;
  return triple;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

SourceDescriptor parse_descriptor(const json& node, const std::string& where) {
  SourceDescriptor desc;
  desc.source_id = require(node, "id", where).get<std::string>();
  if (desc.source_id.empty()) fail(where + ": empty source id");

  std::string basis = node.value("capacity_basis", "net");
  auto parsed_basis = parse_capacity_basis(basis);
  if (!parsed_basis) fail(where + ": capacity_basis must be gross, net or unknown");
  desc.capacity_basis = *parsed_basis;
  desc.delimiter = parse_delimiter(node, where);

  for (const auto& [field, column] : require(node, "columns", where).items()) {
    desc.column_map[field] = column.get<std::string>();
  }
  for (const auto& [term, triple] : require(node, "terms", where).items()) {
    desc.term_map[lower(term)] = parse_triple(triple, where + " term '" + term + "'");
  }
  if (node.contains("country_names")) {
    for (const auto& [raw, canonical] : node["country_names"].items()) {
      desc.country_map[raw] = canonical.get<std::string>();
    }
  }
  if (node.contains("retired_status")) {
    for (const auto& term : node["retired_status"]) {
      desc.retired_terms.push_back(lower(term.get<std::string>()));
    }
  }
  if (node.contains("intermediate_status")) {
    for (const auto& term : node["intermediate_status"]) {
      desc.intermediate_terms.push_back(lower(term.get<std::string>()));
    }
  }
  return desc;
}

FieldSpec parse_field_spec(FieldKind kind, const json& node, const std::string& where) {
  FieldSpec spec;
  spec.field = kind;
  spec.low_prob = require(node, "low", where).get<double>();
  spec.high_prob = require(node, "high", where).get<double>();
  if (kind == FieldKind::Geoposition) {
    spec.max_distance_km = node.value("max_distance_km", 50.0);
  }
  return spec;
}

SimilarityConfig parse_similarity(const json& node, Profile profile, const std::string& where) {
  SimilarityConfig cfg;
  cfg.profile = profile;
  cfg.threshold = require(node, "threshold", where).get<double>();
  for (const auto& [name, field_node] : require(node, "fields", where).items()) {
    auto kind = parse_field_kind(name);
    if (!kind) fail(where + ": unknown similarity field '" + name + "'");
    cfg.fields.push_back(parse_field_spec(*kind, field_node, where + " field " + name));
  }
  // Field order is irrelevant to the posterior, but keep it pinned anyway.
  std::sort(cfg.fields.begin(), cfg.fields.end(),
            [](const FieldSpec& a, const FieldSpec& b) {
              return to_string(a.field) < to_string(b.field);
            });
  return cfg;
}

}  // namespace

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path.string());
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(path.string() + ": " + e.what());
  }

  const std::filesystem::path base = path.parent_path();
  PipelineConfig cfg;

  cfg.schema_version = require(root, "schema_version", "root").get<int>();
  if (cfg.schema_version != 1) {
    fail("unsupported schema_version " + std::to_string(cfg.schema_version));
  }

  for (const auto& country : require(root, "scope", "root")) {
    cfg.scope.insert(country.get<std::string>());
  }
  if (cfg.scope.empty()) fail("scope must list at least one country");

  if (root.contains("stop_tokens")) {
    for (const auto& token : root["stop_tokens"]) {
      cfg.stop_tokens.push_back(token.get<std::string>());
    }
  }

  for (const auto& source_node : require(root, "sources", "root")) {
    std::string where = "source '" + source_node.value("id", "?") + "'";
    SourceConfig source;
    source.descriptor = parse_descriptor(source_node, where);
    source.path = resolve(base, require(source_node, "path", where).get<std::string>());
    cfg.sources.push_back(std::move(source));
  }
  if (cfg.sources.empty()) fail("sources must not be empty");

  for (const auto& [source_id, score] : require(root, "scores", "root").items()) {
    cfg.scores[source_id] = score.get<int>();
  }

  const json& similarity = require(root, "similarity", "root");
  cfg.aggregation = parse_similarity(require(similarity, "aggregation", "similarity"),
                                     Profile::Aggregation, "similarity.aggregation");
  cfg.linkage = parse_similarity(require(similarity, "linkage", "similarity"),
                                 Profile::Linkage, "similarity.linkage");

  if (root.contains("rescale")) {
    const json& rescale = root["rescale"];
    cfg.rescale_default_factor = rescale.value("default_factor", 0.9);
    if (rescale.contains("paired_corpus")) {
      cfg.paired_corpus_path = resolve(base, rescale["paired_corpus"].get<std::string>());
    }
  }
  if (root.contains("statistics")) {
    cfg.statistics_path = resolve(base, root["statistics"].get<std::string>());
  }
  if (root.contains("renewables")) {
    const json& renewables = root["renewables"];
    cfg.renewables_path = resolve(base, require(renewables, "path", "renewables").get<std::string>());
    cfg.renewables_descriptor = parse_descriptor(renewables, "renewables");
  }
  if (root.contains("truth_links")) {
    cfg.truth_links_path = resolve(base, root["truth_links"].get<std::string>());
  }

  cfg.output_dir = resolve(base, root.value("output_dir", "out"));
  cfg.seed = root.value("seed", std::uint64_t{1});

  cfg.validate();
  return cfg;
}

void PipelineConfig::validate() const {
  std::set<std::string> ids;
  for (const SourceConfig& source : sources) {
    const std::string& id = source.descriptor.source_id;
    if (!ids.insert(id).second) fail("duplicate source id '" + id + "'");
    if (!scores.count(id)) fail("source '" + id + "' missing from scores");
    if (scores.at(id) < 1) fail("score for '" + id + "' must be >= 1");
    for (const char* field : {"name", "term", "country", "capacity", "project_id"}) {
      if (!source.descriptor.column_map.count(field)) {
        fail("source '" + id + "' columns must map '" + std::string(field) + "'");
      }
    }
  }

  for (const SimilarityConfig* sim : {&aggregation, &linkage}) {
    if (!(sim->threshold > 0.0 && sim->threshold < 1.0)) {
      fail("similarity threshold must lie in (0, 1)");
    }
    if (sim->fields.empty()) fail("similarity profile needs at least one field");
    for (const FieldSpec& spec : sim->fields) {
      if (!(spec.low_prob > 0.0 && spec.low_prob <= 0.5)) {
        fail("field low probability must lie in (0, 0.5]");
      }
      if (!(spec.high_prob >= 0.5 && spec.high_prob < 1.0)) {
        fail("field high probability must lie in [0.5, 1)");
      }
      if (!(spec.low_prob < spec.high_prob)) {
        fail("field low probability must stay below high");
      }
      if (spec.field == FieldKind::Geoposition && !(spec.max_distance_km > 0.0)) {
        fail("geoposition max_distance_km must be positive");
      }
    }
  }
  if (!(rescale_default_factor > 0.0 && rescale_default_factor <= 1.0)) {
    fail("rescale default_factor must lie in (0, 1]");
  }
}

StopTokens PipelineConfig::make_stop_tokens() const {
  if (stop_tokens.empty()) return StopTokens::defaults();
  return StopTokens(stop_tokens);
}

}  // namespace fleetmatch
