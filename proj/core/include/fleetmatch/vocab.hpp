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

#include <array>
#include <optional>
#include <string_view>

namespace fleetmatch {

/// General fuel category. Wind and Solar are transient members: units
/// carrying them are filtered out at ingest and only re-enter through the
/// renewables concatenation after matching.
enum class FuelType {
  Bioenergy,
  Geothermal,
  HardCoal,
  Hydro,
  Lignite,
  NaturalGas,
  Nuclear,
  Oil,
  Waste,
  Wind,
  Solar,
  Other,
};

/// Technology refinement of the fuel type. Most sources omit it, so Unknown
/// is an ordinary member.
enum class Technology {
  SteamTurbine,
  CCGT,
  OCGT,
  CombustionEngine,
  Reservoir,
  RunOfRiver,
  PumpedStorage,
  PV,
  Onshore,
  Offshore,
  Unknown,
};

/// Whether the unit is a pure power plant or a combined-heat-and-power unit.
enum class SetType {
  PP,
  CHP,
};

std::string_view to_string(FuelType f);
std::string_view to_string(Technology t);
std::string_view to_string(SetType s);

std::optional<FuelType> parse_fueltype(std::string_view text);
std::optional<Technology> parse_technology(std::string_view text);
std::optional<SetType> parse_settype(std::string_view text);

inline constexpr std::array<FuelType, 12> kAllFuelTypes = {
    FuelType::Bioenergy, FuelType::Geothermal, FuelType::HardCoal,
    FuelType::Hydro,     FuelType::Lignite,    FuelType::NaturalGas,
    FuelType::Nuclear,   FuelType::Oil,        FuelType::Waste,
    FuelType::Wind,      FuelType::Solar,      FuelType::Other,
};

inline constexpr std::array<Technology, 11> kAllTechnologies = {
    Technology::SteamTurbine,  Technology::CCGT,
    Technology::OCGT,          Technology::CombustionEngine,
    Technology::Reservoir,     Technology::RunOfRiver,
    Technology::PumpedStorage, Technology::PV,
    Technology::Onshore,       Technology::Offshore,
    Technology::Unknown,
};

inline constexpr bool is_wind_or_solar(FuelType f) {
  return f == FuelType::Wind || f == FuelType::Solar;
}

}  // namespace fleetmatch
