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

#include "fleetmatch/vocab.hpp"

#include "fleetmatch/record.hpp"

namespace fleetmatch {

std::string_view to_string(CapacityBasis b) {
  switch (b) {
    case CapacityBasis::Gross: return "gross";
    case CapacityBasis::Net: return "net";
    case CapacityBasis::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<CapacityBasis> parse_capacity_basis(std::string_view text) {
  if (text == "gross") return CapacityBasis::Gross;
  if (text == "net") return CapacityBasis::Net;
  if (text == "unknown") return CapacityBasis::Unknown;
  return std::nullopt;
}

std::string_view to_string(FuelType f) {
  switch (f) {
    case FuelType::Bioenergy: return "Bioenergy";
    case FuelType::Geothermal: return "Geothermal";
    case FuelType::HardCoal: return "Hard Coal";
    case FuelType::Hydro: return "Hydro";
    case FuelType::Lignite: return "Lignite";
    case FuelType::NaturalGas: return "Natural Gas";
    case FuelType::Nuclear: return "Nuclear";
    case FuelType::Oil: return "Oil";
    case FuelType::Waste: return "Waste";
    case FuelType::Wind: return "Wind";
    case FuelType::Solar: return "Solar";
    case FuelType::Other: return "Other";
  }
  return "Other";
}

std::string_view to_string(Technology t) {
  switch (t) {
    case Technology::SteamTurbine: return "Steam Turbine";
    case Technology::CCGT: return "CCGT";
    case Technology::OCGT: return "OCGT";
    case Technology::CombustionEngine: return "Combustion Engine";
    case Technology::Reservoir: return "Reservoir";
    case Technology::RunOfRiver: return "Run-Of-River";
    case Technology::PumpedStorage: return "Pumped Storage";
    case Technology::PV: return "PV";
    case Technology::Onshore: return "Onshore";
    case Technology::Offshore: return "Offshore";
    case Technology::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(SetType s) {
  return s == SetType::PP ? "PP" : "CHP";
}

std::optional<FuelType> parse_fueltype(std::string_view text) {
  for (FuelType f : kAllFuelTypes) {
    if (to_string(f) == text) return f;
  }
  return std::nullopt;
}

std::optional<Technology> parse_technology(std::string_view text) {
  for (Technology t : kAllTechnologies) {
    if (to_string(t) == text) return t;
  }
  return std::nullopt;
}

std::optional<SetType> parse_settype(std::string_view text) {
  if (text == "PP") return SetType::PP;
  if (text == "CHP") return SetType::CHP;
  return std::nullopt;
}

}  // namespace fleetmatch
