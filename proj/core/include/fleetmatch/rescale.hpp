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
#include <vector>

#include "fleetmatch/record.hpp"

namespace fleetmatch {

/// One paired observation of the same unit's net and gross capacity.
struct CapacityPair {
  FuelType fueltype = FuelType::Other;
  Technology technology = Technology::Unknown;
  double net_mw = 0.0;
  double gross_mw = 0.0;
};

/// Net/gross ratio statistics for one (fuel type, technology) group. The
/// mean is taken over all samples, outliers included; outliers are only
/// flagged, never excluded.
struct RescaleFactor {
  FuelType fueltype = FuelType::Other;
  Technology technology = Technology::Unknown;
  double mean_ratio = 0.0;
  double median_ratio = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  std::size_t n_samples = 0;
  std::vector<double> outlier_ratios;
};

/// Flags values outside [Q1 - 1.5 IQR, Q3 + 1.5 IQR]. Quartiles use linear
/// interpolation between order statistics (quantile position (n-1)p).
std::vector<bool> detect_outliers(std::span<const double> values);

/// Quantile by linear interpolation on a sorted sample, p in [0, 1].
double quantile_linear(std::span<const double> sorted_values, double p);

/// One factor per (fuel type, technology) present in the input. Pairs with a
/// non-positive capacity on either side are skipped. Output is sorted by
/// (fuel type, technology) name.
std::vector<RescaleFactor> estimate_factors(std::span<const CapacityPair> pairs);

/// Lookup table with the fallback chain: exact (fuel, technology) match,
/// then the fuel-level mean (weighted by sample counts), then the default.
/// The effective multiplier is clamped to <= 1.
class FactorTable {
 public:
  FactorTable() = default;
  FactorTable(std::vector<RescaleFactor> factors, double default_factor);

  double default_factor() const { return default_factor_; }
  const std::vector<RescaleFactor>& factors() const { return factors_; }

  /// The factor apply_factor would use, before clamping.
  double lookup(FuelType fuel, Technology tech) const;

 private:
  std::vector<RescaleFactor> factors_;
  double default_factor_ = 0.9;
};

/// Rescales a gross-basis record to net. The capacity is multiplied by the
/// looked-up mean ratio, clamped to at most 1 so a data glitch can never
/// inflate a gross capacity.
UnitRecord apply_factor(const UnitRecord& record, const FactorTable& table);

}  // namespace fleetmatch
