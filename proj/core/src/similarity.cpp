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
#include <array>
#include <cassert>
#include <cstddef>

#include "fleetmatch/normalize.hpp"

namespace fleetmatch {

std::string_view to_string(FieldKind k) {
  switch (k) {
    case FieldKind::Name: return "name";
    case FieldKind::Fueltype: return "fueltype";
    case FieldKind::Country: return "country";
    case FieldKind::Geoposition: return "geoposition";
  }
  return "name";
}

std::optional<FieldKind> parse_field_kind(std::string_view text) {
  if (text == "name") return FieldKind::Name;
  if (text == "fueltype") return FieldKind::Fueltype;
  if (text == "country") return FieldKind::Country;
  if (text == "geoposition") return FieldKind::Geoposition;
  return std::nullopt;
}

SimilarityConfig SimilarityConfig::aggregation_defaults() {
  SimilarityConfig cfg;
  cfg.profile = Profile::Aggregation;
  cfg.threshold = 0.985;
  cfg.fields = {
      {FieldKind::Name, 0.10, 0.97, 0.0},
      {FieldKind::Fueltype, 0.40, 0.80, 0.0},
      {FieldKind::Geoposition, 0.30, 0.90, 50.0},
  };
  return cfg;
}

SimilarityConfig SimilarityConfig::linkage_defaults() {
  SimilarityConfig cfg;
  cfg.profile = Profile::Linkage;
  cfg.threshold = 0.95;
  cfg.fields = {
      {FieldKind::Name, 0.10, 0.95, 0.0},
      {FieldKind::Fueltype, 0.40, 0.80, 0.0},
      {FieldKind::Geoposition, 0.30, 0.90, 50.0},
  };
  return cfg;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  if (a.size() > b.size()) std::swap(a, b);
  std::vector<std::size_t> row(a.size() + 1);
  for (std::size_t i = 0; i <= a.size(); ++i) row[i] = i;
  for (std::size_t j = 1; j <= b.size(); ++j) {
    std::size_t diag = row[0];
    row[0] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
      std::size_t cost = (a[i - 1] == b[j - 1]) ? 0 : 1;
      std::size_t next = std::min({row[i] + 1, row[i - 1] + 1, diag + cost});
      diag = row[i];
      row[i] = next;
    }
  }
  return row[a.size()];
}

namespace {

// Jaccard overlap of two sorted unique token lists.
double token_jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.empty() || b.empty()) return 0.0;
  std::size_t shared = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int cmp = a[i].compare(b[j]);
    if (cmp == 0) {
      ++shared;
      ++i;
      ++j;
    } else if (cmp < 0) {
      ++i;
    } else {
      ++j;
    }
  }
  return static_cast<double>(shared) /
         static_cast<double>(a.size() + b.size() - shared);
}

}  // namespace

double compare_names(const NameKey& a, const NameKey& b) {
  if (a.canonical.empty() || b.canonical.empty()) return 0.0;
  if (a.canonical == b.canonical) return 1.0;

  std::size_t longer = std::max(a.canonical.size(), b.canonical.size());
  double edit_sim = 1.0 - static_cast<double>(edit_distance(a.canonical, b.canonical)) /
                              static_cast<double>(longer);
  double token_sim = token_jaccard(a.tokens, b.tokens);
  return std::max(edit_sim, token_sim);
}

double compare_names(std::string_view canonical_a, std::string_view canonical_b) {
  const StopTokens none{{}};
  return compare_names(make_name_key(canonical_a, none), make_name_key(canonical_b, none));
}

double compare_geo(const GeoPoint& a, const GeoPoint& b, double max_distance_km) {
  double d = haversine_km(a, b);
  return std::max(0.0, 1.0 - d / max_distance_km);
}

double field_probability(double score, const FieldSpec& spec) {
  double p = spec.low_prob + score * (spec.high_prob - spec.low_prob);
  return std::clamp(p, kProbEpsilon, 1.0 - kProbEpsilon);
}

double combine_bayes(std::span<const double> probs) {
  if (probs.empty()) return 0.5;
  if (probs.size() == 1) return probs.front();

  // Fixed multiplication order makes the posterior bit-identical under any
  // permutation of the evidence.
  std::vector<double> sorted(probs.begin(), probs.end());
  std::sort(sorted.begin(), sorted.end());

  // Exactly complementary evidence cancels: p and 1-p contribute inverse
  // odds, so dropping the pair keeps the real-valued result and makes the
  // cancellation hold in floating point as well.
  std::size_t lo = 0;
  std::size_t hi = sorted.size();
  std::vector<double> kept;
  kept.reserve(sorted.size());
  while (lo < hi) {
    double sum = sorted[lo] + sorted[hi - 1];
    if (lo < hi - 1 && sum == 1.0) {
      ++lo;
      --hi;
    } else if (sum < 1.0) {
      kept.push_back(sorted[lo++]);
    } else {
      kept.push_back(sorted[--hi]);
    }
  }
  std::sort(kept.begin(), kept.end());

  if (kept.empty()) return 0.5;
  if (kept.size() == 1) return kept.front();
  double match = 1.0;
  double non_match = 1.0;
  for (double p : kept) {
    match *= p;
    non_match *= 1.0 - p;
  }
  return match / (match + non_match);
}

namespace {

template <typename Record>
std::optional<GeoPoint> position_of(const Record& r) {
  return r.position;
}

template <typename Record>
double similarity_impl(const Record& a, const Record& b, const SimilarityConfig& cfg) {
  if (a.country != b.country) return 0.0;

  std::array<double, 8> probs;
  assert(cfg.fields.size() <= probs.size());
  std::size_t n = 0;
  for (const FieldSpec& spec : cfg.fields) {
    switch (spec.field) {
      case FieldKind::Name:
        probs[n++] = field_probability(compare_names(a.name_key, b.name_key), spec);
        break;
      case FieldKind::Fueltype:
        probs[n++] = field_probability(a.fueltype == b.fueltype ? 1.0 : 0.0, spec);
        break;
      case FieldKind::Country:
        // Country equality already passed the blocker above.
        probs[n++] = field_probability(1.0, spec);
        break;
      case FieldKind::Geoposition: {
        auto pa = position_of(a);
        auto pb = position_of(b);
        if (pa && pb) {
          probs[n++] = field_probability(compare_geo(*pa, *pb, spec.max_distance_km), spec);
        } else {
          probs[n++] = 0.5;  // no evidence either way
        }
        break;
      }
    }
  }
  return combine_bayes(std::span<const double>(probs.data(), n));
}

}  // namespace

template <typename Record>
double record_similarity(const Record& a, const Record& b, const SimilarityConfig& cfg) {
  return similarity_impl(a, b, cfg);
}

template double record_similarity<UnitRecord>(const UnitRecord&, const UnitRecord&,
                                              const SimilarityConfig&);
template double record_similarity<PlantRecord>(const PlantRecord&, const PlantRecord&,
                                               const SimilarityConfig&);

}  // namespace fleetmatch
