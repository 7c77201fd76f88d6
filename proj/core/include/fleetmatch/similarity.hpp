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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fleetmatch/record.hpp"

namespace fleetmatch {

/// Probabilities are kept this far away from 0 and 1 so no single field can
/// dominate the combined posterior outright.
inline constexpr double kProbEpsilon = 1e-4;

enum class FieldKind { Name, Fueltype, Country, Geoposition };

std::string_view to_string(FieldKind k);
std::optional<FieldKind> parse_field_kind(std::string_view text);

/// Per-field evidence anchors: a raw similarity score in [0,1] maps linearly
/// from low_prob (score 0) to high_prob (score 1).
struct FieldSpec {
  FieldKind field = FieldKind::Name;
  double low_prob = 0.1;   // in (0, 0.5]
  double high_prob = 0.9;  // in [0.5, 1)
  double max_distance_km = 50.0;  // geoposition only
};

enum class Profile { Aggregation, Linkage };

/// One named comparison scheme: fields, their anchors and the posterior
/// threshold above which a pair counts as a match.
struct SimilarityConfig {
  Profile profile = Profile::Aggregation;
  double threshold = 0.985;
  std::vector<FieldSpec> fields;

  /// Calibrated defaults for in-source unit aggregation (threshold 0.985).
  static SimilarityConfig aggregation_defaults();
  /// Calibrated defaults for cross-dataset plant linkage (threshold 0.95,
  /// flatter name anchor).
  static SimilarityConfig linkage_defaults();
};

/// Name similarity on canonical names: the maximum of normalized edit
/// similarity and token-set Jaccard overlap, so block suffixes and word
/// reordering do not destroy a match. Empty input on either side scores 0.
double compare_names(const NameKey& a, const NameKey& b);

/// Convenience overload that tokenizes on the fly.
double compare_names(std::string_view canonical_a, std::string_view canonical_b);

/// Levenshtein distance between two byte strings.
std::size_t edit_distance(std::string_view a, std::string_view b);

/// Geographic proximity score: 1 at zero distance, falling linearly to 0 at
/// max_distance_km. Missing coordinates are handled by the caller (the field
/// then contributes neutral evidence, probability 0.5).
double compare_geo(const GeoPoint& a, const GeoPoint& b, double max_distance_km);

/// Maps a field score through its anchors and clamps to
/// [kProbEpsilon, 1 - kProbEpsilon].
double field_probability(double score, const FieldSpec& spec);

/// Naive-Bayes combination of independent field probabilities with a uniform
/// prior:  post = prod(p) / (prod(p) + prod(1-p)).
///
/// The inputs are multiplied in sorted order, which makes the result exactly
/// invariant under permutation of the input. A single field returns itself
/// unchanged; an empty list returns the prior 0.5.
double combine_bayes(std::span<const double> probs);

/// Posterior probability that two records denote the same plant. Different
/// countries short-circuit to 0 (the country blocker); a missing coordinate
/// pair turns the geoposition field into neutral evidence.
template <typename Record>
double record_similarity(const Record& a, const Record& b, const SimilarityConfig& cfg);

extern template double record_similarity<UnitRecord>(const UnitRecord&,
                                                     const UnitRecord&,
                                                     const SimilarityConfig&);
extern template double record_similarity<PlantRecord>(const PlantRecord&,
                                                      const PlantRecord&,
                                                      const SimilarityConfig&);

}  // namespace fleetmatch
