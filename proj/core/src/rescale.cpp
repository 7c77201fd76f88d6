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
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace fleetmatch {

double quantile_linear(std::span<const double> sorted_values, double p) {
  const std::size_t n = sorted_values.size();
  if (n == 1) return sorted_values[0];
  double h = static_cast<double>(n - 1) * p;
  std::size_t lo = static_cast<std::size_t>(h);
  if (lo >= n - 1) return sorted_values[n - 1];
  double frac = h - static_cast<double>(lo);
  return sorted_values[lo] + frac * (sorted_values[lo + 1] - sorted_values[lo]);
}

std::vector<bool> detect_outliers(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double q1 = quantile_linear(sorted, 0.25);
  double q3 = quantile_linear(sorted, 0.75);
  double iqr = q3 - q1;
  double lower = q1 - 1.5 * iqr;
  double upper = q3 + 1.5 * iqr;

  std::vector<bool> flags(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    flags[i] = values[i] < lower || values[i] > upper;
  }
  return flags;
}

std::vector<RescaleFactor> estimate_factors(std::span<const CapacityPair> pairs) {
  std::map<std::pair<FuelType, Technology>, std::vector<double>> groups;
  for (const CapacityPair& pair : pairs) {
    if (pair.net_mw <= 0.0 || pair.gross_mw <= 0.0) continue;
    groups[{pair.fueltype, pair.technology}].push_back(pair.net_mw / pair.gross_mw);
  }

  std::vector<RescaleFactor> factors;
  factors.reserve(groups.size());
  for (auto& [key, ratios] : groups) {
    RescaleFactor f;
    f.fueltype = key.first;
    f.technology = key.second;
    f.n_samples = ratios.size();

    double sum = 0.0;
    for (double r : ratios) sum += r;
    f.mean_ratio = sum / static_cast<double>(ratios.size());

    std::vector<double> sorted = ratios;
    std::sort(sorted.begin(), sorted.end());
    f.median_ratio = quantile_linear(sorted, 0.5);
    f.q1 = quantile_linear(sorted, 0.25);
    f.q3 = quantile_linear(sorted, 0.75);

    std::vector<bool> flags = detect_outliers(ratios);
    for (std::size_t i = 0; i < ratios.size(); ++i) {
      if (flags[i]) f.outlier_ratios.push_back(ratios[i]);
    }

    if (!(f.mean_ratio > 0.0 && f.mean_ratio <= 1.2)) {
      throw std::runtime_error(
          "estimate_factors: implausible mean net/gross ratio " +
          std::to_string(f.mean_ratio) + " for " + std::string(to_string(f.fueltype)) +
          " / " + std::string(to_string(f.technology)));
    }
    factors.push_back(std::move(f));
  }

  std::sort(factors.begin(), factors.end(), [](const RescaleFactor& a, const RescaleFactor& b) {
    if (a.fueltype != b.fueltype) return to_string(a.fueltype) < to_string(b.fueltype);
    return to_string(a.technology) < to_string(b.technology);
  });
  return factors;
}

FactorTable::FactorTable(std::vector<RescaleFactor> factors, double default_factor)
    : factors_(std::move(factors)), default_factor_(default_factor) {}

double FactorTable::lookup(FuelType fuel, Technology tech) const {
  for (const RescaleFactor& f : factors_) {
    if (f.fueltype == fuel && f.technology == tech) return f.mean_ratio;
  }
  // Fuel-level fallback: mean of the fuel's groups weighted by sample count,
  // which equals the pooled mean of all its ratios.
  double weighted = 0.0;
  std::size_t n = 0;
  for (const RescaleFactor& f : factors_) {
    if (f.fueltype == fuel) {
      weighted += f.mean_ratio * static_cast<double>(f.n_samples);
      n += f.n_samples;
    }
  }
  if (n > 0) return weighted / static_cast<double>(n);
  return default_factor_;
}

UnitRecord apply_factor(const UnitRecord& record, const FactorTable& table) {
  double factor = std::min(1.0, table.lookup(record.fueltype, record.technology));
  UnitRecord rescaled = record;
  rescaled.capacity_mw = record.capacity_mw.scaled(factor);
  return rescaled;
}

}  // namespace fleetmatch
