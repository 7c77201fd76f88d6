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

#include "fleetmatch/fixture.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "fleetmatch/csv.hpp"
#include "fleetmatch/normalize.hpp"
#include "fleetmatch/similarity.hpp"
#include "fleetmatch/snapshots.hpp"

namespace fleetmatch {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Stdlib distributions are implementation-defined; a hand-rolled splitmix64
// keeps fixtures byte-identical across toolchains.
class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double symmetric() { return uniform() * 2.0 - 1.0; }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool chance(double p) { return uniform() < p; }

  template <typename T>
  const T& pick(const std::vector<T>& values) {
    return values[below(values.size())];
  }

 private:
  std::uint64_t state_;
};

// --- ground truth vocabulary -------------------------------------------------

const std::vector<std::string> kPrefixes = {
    "nord",   "sud",    "ober",   "unter",  "alt",    "neu",   "gross", "klein",
    "hoch",   "west",   "ost",    "mittel", "schwarz", "weiss", "lang",  "stein",
    "gold",   "birk",   "linden", "eichen", "rosen",  "nieder", "wiesen", "felsen",
    "muhl",   "kirch",  "markt",  "heide",  "tann",   "buch",  "sonnen", "winter",
    "bruch",  "salz",   "grun",   "sand"};
const std::vector<std::string> kMiddles = {"", "en", "er", "au", "ing", "e", ""};
const std::vector<std::string> kSuffixes = {
    "bach",  "berg", "burg", "dorf",  "feld",  "hafen", "haus", "heim",
    "hof",   "stadt", "tal", "wald",  "bruck", "see",   "furt", "grund",
    "kamp",  "moor", "scheid", "werth", "horst", "rode", "wick", "hagen"};
const std::vector<std::string> kSecondWords = {
    "Nord", "Ost",  "Sued",   "West", "Mitte", "Rhein", "Weser", "Elbe", "Oder",
    "Main", "Isar", "Neckar", "Ems",  "Ruhr",  "Saale", "Havel", "Spree", "Lahn"};

const std::vector<std::string> kGenericPrefixes = {
    "Kraftwerk", "Heizkraftwerk", "Power Station", "Centrale", "Power Plant"};
const std::vector<std::string> kLegalSuffixes = {"GmbH", "AG", "SA"};

struct FuelWeight {
  FuelType fuel;
  double weight;
};
const std::vector<FuelWeight> kFuelWeights = {
    {FuelType::NaturalGas, 0.22}, {FuelType::HardCoal, 0.16}, {FuelType::Hydro, 0.18},
    {FuelType::Lignite, 0.07},    {FuelType::Nuclear, 0.05},  {FuelType::Oil, 0.08},
    {FuelType::Bioenergy, 0.10},  {FuelType::Waste, 0.07},    {FuelType::Geothermal, 0.02},
    {FuelType::Other, 0.05},
};

const std::vector<Technology>& techs_for(FuelType fuel) {
  static const std::vector<Technology> gas = {Technology::CCGT, Technology::OCGT,
                                              Technology::SteamTurbine,
                                              Technology::CombustionEngine};
  static const std::vector<Technology> steam = {Technology::SteamTurbine};
  static const std::vector<Technology> hydro = {Technology::Reservoir,
                                                Technology::RunOfRiver,
                                                Technology::PumpedStorage};
  static const std::vector<Technology> oil = {Technology::SteamTurbine,
                                              Technology::CombustionEngine,
                                              Technology::OCGT};
  static const std::vector<Technology> other = {Technology::Unknown,
                                                Technology::SteamTurbine,
                                                Technology::CombustionEngine};
  switch (fuel) {
    case FuelType::NaturalGas: return gas;
    case FuelType::Hydro: return hydro;
    case FuelType::Oil: return oil;
    case FuelType::Other: return other;
    default: return steam;
  }
}

FuelType flip_fuel(FuelType fuel) {
  switch (fuel) {
    case FuelType::HardCoal: return FuelType::NaturalGas;
    case FuelType::NaturalGas: return FuelType::HardCoal;
    case FuelType::Lignite: return FuelType::HardCoal;
    case FuelType::Oil: return FuelType::NaturalGas;
    default: return FuelType::Other;
  }
}

// Raw spelling variants per vocabulary member, so each source carries its own
// dialect and the term maps do real work.
const std::vector<std::string>& fuel_spellings(FuelType fuel) {
  static const std::map<FuelType, std::vector<std::string>> kTable = {
      {FuelType::NaturalGas, {"natural gas", "erdgas", "gas", "fossil gas"}},
      {FuelType::HardCoal, {"hard coal", "steinkohle", "coal", "anthracite"}},
      {FuelType::Lignite, {"lignite", "braunkohle", "brown coal", "peat"}},
      {FuelType::Hydro, {"hydro", "wasserkraft", "hydropower", "water"}},
      {FuelType::Nuclear, {"nuclear", "kernenergie", "uranium", "atomkraft"}},
      {FuelType::Oil, {"oil", "heizoel", "fuel oil", "diesel"}},
      {FuelType::Bioenergy, {"bioenergy", "biomasse", "biomass", "biogas"}},
      {FuelType::Waste, {"waste", "abfall", "refuse", "municipal waste"}},
      {FuelType::Geothermal, {"geothermal", "geothermie", "geo thermal", "erdwaerme"}},
      {FuelType::Other, {"other", "misc", "unspecified", "mixed"}},
      {FuelType::Wind, {"wind", "windkraft", "wind power", "wind energy"}},
      {FuelType::Solar, {"solar", "photovoltaics", "solar pv", "sonnenenergie"}},
  };
  return kTable.at(fuel);
}

const std::vector<std::string>& tech_spellings(Technology tech) {
  static const std::map<Technology, std::vector<std::string>> kTable = {
      {Technology::SteamTurbine, {"steam turbine", "dampfturbine", "steam"}},
      {Technology::CCGT, {"ccgt", "gud", "combined cycle"}},
      {Technology::OCGT, {"ocgt", "gas turbine", "open cycle"}},
      {Technology::CombustionEngine, {"combustion engine", "motor", "engine"}},
      {Technology::Reservoir, {"reservoir", "speicher", "dam"}},
      {Technology::RunOfRiver, {"run of river", "laufwasser", "ror"}},
      {Technology::PumpedStorage, {"pumped storage", "pumpspeicher", "pumped hydro"}},
      {Technology::PV, {"pv", "photovoltaic", "panel"}},
      {Technology::Onshore, {"onshore", "land based", "onshore turbine"}},
      {Technology::Offshore, {"offshore", "sea based", "offshore turbine"}},
      {Technology::Unknown, {"", "n a", "unknown"}},
  };
  return kTable.at(tech);
}

// Deterministic raw term for a triple as spelled by one source.
std::string spell_term(std::size_t source_index, FuelType fuel, Technology tech,
                       SetType set) {
  const auto& fuels = fuel_spellings(fuel);
  const auto& techs = tech_spellings(tech);
  std::size_t fi = (source_index + static_cast<std::size_t>(fuel)) % fuels.size();
  std::size_t ti = (source_index * 2 + static_cast<std::size_t>(tech)) % techs.size();
  std::string term = fuels[fi];
  if (!techs[ti].empty()) term += " / " + techs[ti];
  if (set == SetType::CHP) term += " (chp)";
  return term;
}

// Synthetic bounding box per country, spaced so boxes never overlap.
struct CountryBox {
  double lat0, lat1, lon0, lon1;
};
CountryBox country_box(std::size_t index) {
  double lat0 = 36.0 + static_cast<double>(index % 5) * 6.5;
  double lon0 = -10.0 + static_cast<double>(index / 5) * 9.0;
  return {lat0, lat0 + 6.0, lon0, lon0 + 8.0};
}

// Distinct plants keep their names and sites dissimilar enough that no
// honest comparator can confuse them; ambiguity belongs in the perturbation,
// not in the ground truth.
constexpr double kMinPlantSeparationKm = 25.0;
constexpr double kMaxCrossPlantNameSimilarity = 0.7;

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string apply_typo(const std::string& name, SplitMix& rng) {
  std::string out = name;
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::size_t pos = rng.below(out.size());
    if (out[pos] == ' ') continue;
    char replacement = static_cast<char>('a' + rng.below(26));
    if (replacement == out[pos]) continue;
    out[pos] = replacement;
    return out;
  }
  return out;
}

Decimal random_capacity(SplitMix& rng, double lo_mw, double hi_mw) {
  double v = std::exp(std::log(lo_mw) + rng.uniform() * (std::log(hi_mw) - std::log(lo_mw)));
  return Decimal::from_micro(static_cast<std::int64_t>(std::llround(v * 10.0)) * 100000);
}

FuelType draw_fuel(SplitMix& rng) {
  double x = rng.uniform();
  double acc = 0.0;
  for (const FuelWeight& fw : kFuelWeights) {
    acc += fw.weight;
    if (x < acc) return fw.fuel;
  }
  return FuelType::Other;
}

// A fresh display name whose canonical form stays dissimilar to everything
// generated so far; near-identical names of distinct plants would make the
// fixture ambiguous by construction.
std::string fresh_name(SplitMix& rng, std::vector<NameKey>& used, const StopTokens& stops) {
  for (int attempt = 0; attempt < 20000; ++attempt) {
    std::string stem = rng.pick(kPrefixes) + rng.pick(kMiddles) + rng.pick(kSuffixes);
    std::string display = capitalize(stem);
    if (rng.chance(0.3)) display += " " + rng.pick(kSecondWords);

    NameKey key = make_name_key(display, stops);
    if (key.canonical.empty()) continue;
    bool ok = true;
    for (const NameKey& existing : used) {
      if (compare_names(key, existing) >= kMaxCrossPlantNameSimilarity) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    used.push_back(std::move(key));
    return display;
  }
  throw std::runtime_error("fixture: name space exhausted, reduce n_plants");
}

GeoPoint place_plant(SplitMix& rng, const CountryBox& box,
                     const std::vector<GeoPoint>& existing) {
  GeoPoint best{0, 0};
  double best_distance = -1.0;
  for (int attempt = 0; attempt < 200; ++attempt) {
    GeoPoint candidate{box.lat0 + rng.uniform() * (box.lat1 - box.lat0),
                       box.lon0 + rng.uniform() * (box.lon1 - box.lon0)};
    double nearest = 1e18;
    for (const GeoPoint& p : existing) {
      nearest = std::min(nearest, haversine_km(candidate, p));
      if (nearest < kMinPlantSeparationKm) break;
    }
    if (nearest >= kMinPlantSeparationKm) return candidate;
    if (nearest > best_distance) {
      best_distance = nearest;
      best = candidate;
    }
  }
  return best;  // crowded country, take the most isolated attempt
}

}  // namespace

// --- spec loading ------------------------------------------------------------

FixtureSpec FixtureSpec::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("fixture spec: cannot open " + path.string());
  json root = json::parse(in);

  FixtureSpec spec;
  spec.seed = root.value("seed", std::uint64_t{1});
  spec.n_plants = root.value("n_plants", std::size_t{100});
  if (root.contains("shared_plants")) {
    spec.shared_plants = root["shared_plants"].get<std::size_t>();
  }
  if (root.contains("exclusive_plants")) {
    for (const auto& n : root["exclusive_plants"]) {
      spec.exclusive_plants.push_back(n.get<std::size_t>());
    }
  }
  spec.hard_plants = root.value("hard_plants", std::size_t{0});
  spec.hard_capacity_max_mw = root.value("hard_capacity_max_mw", 25.0);
  if (root.contains("countries")) {
    spec.countries.clear();
    for (const auto& c : root["countries"]) spec.countries.push_back(c.get<std::string>());
  }
  spec.year_min = root.value("year_min", 1950);
  spec.year_max = root.value("year_max", 2016);
  spec.chp_prob = root.value("chp_prob", 0.15);
  spec.n_renewables = root.value("n_renewables", std::size_t{0});

  for (const auto& node : root.at("sources")) {
    SourcePerturbation s;
    s.source_id = node.at("id").get<std::string>();
    auto basis = parse_capacity_basis(node.value("capacity_basis", "net"));
    if (!basis) throw std::runtime_error("fixture spec: bad capacity_basis");
    s.basis = *basis;
    s.score = node.value("score", 3);
    std::string delim = node.value("delimiter", ",");
    s.delimiter = delim.empty() ? ',' : delim[0];
    s.has_coordinates = node.value("has_coordinates", true);
    s.presence_prob = node.value("presence_prob", 1.0);
    s.year_prob = node.value("year_prob", 1.0);
    s.split_prob = node.value("split_prob", 0.0);
    s.max_blocks = node.value("max_blocks", 3);
    s.typo_prob = node.value("typo_prob", 0.0);
    s.prefix_prob = node.value("prefix_prob", 0.0);
    s.coord_jitter_km = node.value("coord_jitter_km", 0.0);
    s.capacity_noise = node.value("capacity_noise", 0.0);
    s.fuel_flip_prob = node.value("fuel_flip_prob", 0.0);
    s.fuel_flip_max_mw = node.value("fuel_flip_max_mw", 50.0);
    s.windsolar_rows = node.value("windsolar_rows", std::size_t{0});
    s.out_of_scope_rows = node.value("out_of_scope_rows", std::size_t{0});
    s.retired_rows = node.value("retired_rows", std::size_t{0});
    s.intermediate_prob = node.value("intermediate_prob", 0.0);
    spec.sources.push_back(std::move(s));
  }
  if (spec.sources.empty()) throw std::runtime_error("fixture spec: sources missing");
  return spec;
}

FixtureSpec FixtureSpec::clean(std::size_t n_plants, std::size_t n_sources,
                               std::uint64_t seed) {
  FixtureSpec spec;
  spec.seed = seed;
  spec.n_plants = n_plants;
  spec.shared_plants = n_plants;
  spec.exclusive_plants.assign(n_sources, 0);
  spec.countries = {"Germany", "France"};
  for (std::size_t i = 0; i < n_sources; ++i) {
    SourcePerturbation s;
    s.source_id = "S" + std::to_string(i + 1);
    s.score = static_cast<int>(n_sources - i) + 1;
    spec.sources.push_back(std::move(s));
  }
  return spec;
}

FixtureSpec FixtureSpec::generic(std::size_t n_plants, std::size_t n_sources,
                                 std::uint64_t seed) {
  FixtureSpec spec;
  spec.seed = seed;
  spec.n_plants = n_plants;
  spec.countries = {"Germany", "France", "Poland", "Austria",
                    "Netherlands", "Denmark", "Sweden", "Spain"};
  for (std::size_t i = 0; i < n_sources; ++i) {
    SourcePerturbation s;
    s.source_id = "S" + std::to_string(i + 1);
    s.basis = (i == 1) ? CapacityBasis::Gross : CapacityBasis::Net;
    s.score = std::max<int>(1, 5 - static_cast<int>(i));
    s.delimiter = (i % 2 == 0) ? ',' : ';';
    s.has_coordinates = true;
    s.presence_prob = 0.85 + 0.03 * static_cast<double>(i % 3);
    s.year_prob = 0.8;
    s.split_prob = 0.2;
    s.max_blocks = 3;
    s.typo_prob = 0.15;
    s.prefix_prob = 0.2;
    s.coord_jitter_km = 1.0;
    s.capacity_noise = 0.03;
    spec.sources.push_back(std::move(s));
  }
  return spec;
}

// --- world building ----------------------------------------------------------

FixtureWorld build_world(const FixtureSpec& spec) {
  if (spec.sources.empty()) throw std::invalid_argument("fixture: no sources");
  if (spec.shared_plants && spec.exclusive_plants.size() != spec.sources.size()) {
    throw std::invalid_argument("fixture: exclusive_plants must match source count");
  }

  FixtureWorld world;
  world.spec = spec;
  SplitMix rng(spec.seed);
  const StopTokens& stops = StopTokens::defaults();

  std::size_t n_plants = spec.n_plants;
  if (spec.shared_plants) {
    n_plants = *spec.shared_plants;
    for (std::size_t n : spec.exclusive_plants) n_plants += n;
  }

  // Ground truth fleet.
  std::vector<NameKey> used_names;
  std::map<std::string, std::vector<GeoPoint>> placed;
  std::vector<std::string> hard_alt_names(n_plants);
  for (std::size_t p = 0; p < n_plants; ++p) {
    TruePlant plant;
    plant.name = fresh_name(rng, used_names, stops);
    plant.fueltype = draw_fuel(rng);
    const auto& techs = techs_for(plant.fueltype);
    plant.technology = rng.chance(0.2) ? Technology::Unknown : rng.pick(techs);
    plant.set = rng.chance(spec.chp_prob) ? SetType::CHP : SetType::PP;
    std::size_t country_index = rng.below(spec.countries.size());
    plant.country = spec.countries[country_index];
    plant.position = place_plant(rng, country_box(country_index), placed[plant.country]);
    placed[plant.country].push_back(plant.position);
    plant.year = rng.range(spec.year_min, spec.year_max);

    if (spec.shared_plants) {
      if (p < *spec.shared_plants) {
        for (std::size_t s = 0; s < spec.sources.size(); ++s) plant.sources.push_back(s);
        plant.hard = p < spec.hard_plants;
      } else {
        // Exclusive ranges follow the shared block, one source after another.
        std::size_t offset = *spec.shared_plants;
        for (std::size_t s = 0; s < spec.sources.size(); ++s) {
          if (p < offset + spec.exclusive_plants[s]) {
            plant.sources.push_back(s);
            break;
          }
          offset += spec.exclusive_plants[s];
        }
      }
    } else {
      for (std::size_t s = 0; s < spec.sources.size(); ++s) {
        if (rng.chance(spec.sources[s].presence_prob)) plant.sources.push_back(s);
      }
    }

    plant.capacity_mw = plant.hard ? random_capacity(rng, 2.0, spec.hard_capacity_max_mw)
                                   : random_capacity(rng, 5.0, 1500.0);
    if (plant.hard) {
      hard_alt_names[p] = fresh_name(rng, used_names, stops);
    }
    world.plants.push_back(std::move(plant));
  }

  // Per-source views.
  world.source_units.resize(spec.sources.size());
  std::vector<std::vector<std::vector<std::string>>> block_ids(
      spec.sources.size(), std::vector<std::vector<std::string>>(n_plants));
  for (std::size_t s = 0; s < spec.sources.size(); ++s) {
    const SourcePerturbation& pert = spec.sources[s];
    const bool hard_source = s + 1 == spec.sources.size();
    for (std::size_t p = 0; p < n_plants; ++p) {
      const TruePlant& plant = world.plants[p];
      if (std::find(plant.sources.begin(), plant.sources.end(), s) == plant.sources.end()) {
        continue;
      }
      const bool hard_here = plant.hard && hard_source;

      std::string name = plant.name;
      FuelType fuel = plant.fueltype;
      Technology tech = plant.technology;
      std::optional<GeoPoint> position;
      std::optional<int> year;

      if (hard_here) {
        name = hard_alt_names[p];
        fuel = flip_fuel(fuel);
      } else {
        if (rng.chance(pert.typo_prob)) name = apply_typo(name, rng);
        if (rng.chance(pert.prefix_prob)) {
          name = rng.pick(kGenericPrefixes) + " " + name;
        } else if (rng.chance(pert.prefix_prob * 0.5)) {
          name += " " + rng.pick(kLegalSuffixes);
        }
        if (rng.chance(pert.fuel_flip_prob) &&
            plant.capacity_mw < Decimal::from_double(pert.fuel_flip_max_mw)) {
          fuel = flip_fuel(fuel);
        }
        if (pert.has_coordinates) {
          double dlat = pert.coord_jitter_km / 111.0 * rng.symmetric();
          double rad = plant.position.lat * std::numbers::pi / 180.0;
          double dlon = pert.coord_jitter_km / (111.0 * std::cos(rad)) * rng.symmetric();
          position = GeoPoint{plant.position.lat + dlat, plant.position.lon + dlon};
        }
        if (rng.chance(pert.year_prob)) year = plant.year;
      }

      Decimal view_capacity =
          plant.capacity_mw.scaled(1.0 + pert.capacity_noise * rng.symmetric());

      // Optional split into blocks with exactly conserved capacity.
      std::size_t n_blocks = 1;
      if (!hard_here && rng.chance(pert.split_prob) && pert.max_blocks >= 2) {
        n_blocks = static_cast<std::size_t>(rng.range(2, pert.max_blocks));
      }
      const bool letter_blocks = rng.chance(0.4);

      std::int64_t remaining = view_capacity.micro();
      for (std::size_t b = 0; b < n_blocks; ++b) {
        std::int64_t share = remaining;
        if (b + 1 < n_blocks) {
          double frac = 0.3 + 0.4 * rng.uniform();
          share = static_cast<std::int64_t>(static_cast<double>(remaining) * frac /
                                            static_cast<double>(n_blocks - b));
          share = std::max<std::int64_t>(share, 100000);  // 0.1 MW floor
        }
        remaining -= share;

        UnitRecord unit;
        unit.name = name;
        if (n_blocks > 1) {
          unit.name += letter_blocks ? std::string(" ") + static_cast<char>('A' + b)
                                     : " " + std::to_string(b + 1);
        }
        unit.fueltype = fuel;
        unit.technology = tech;
        unit.set = plant.set;
        unit.country = plant.country;
        unit.capacity_mw = Decimal::from_micro(share);
        unit.year_commissioned = year;
        unit.position = position;
        unit.source_id = pert.source_id;
        unit.project_id = pert.source_id + "-" + std::to_string(1000 + p) +
                          (n_blocks > 1 ? "-b" + std::to_string(b + 1) : "");
        unit.name_key = make_name_key(unit.name, stops);
        block_ids[s][p].push_back(unit.project_id);
        world.source_units[s].push_back(std::move(unit));
      }
    }
  }

  // Unit-level truth links: every cross-source block pair of one plant.
  for (std::size_t p = 0; p < n_plants; ++p) {
    const TruePlant& plant = world.plants[p];
    for (std::size_t i = 0; i < plant.sources.size(); ++i) {
      for (std::size_t j = i + 1; j < plant.sources.size(); ++j) {
        std::size_t si = plant.sources[i];
        std::size_t sj = plant.sources[j];
        for (const std::string& ida : block_ids[si][p]) {
          for (const std::string& idb : block_ids[sj][p]) {
            world.truth_links.push_back(ClaimLink{spec.sources[si].source_id, ida,
                                                  spec.sources[sj].source_id, idb});
          }
        }
      }
    }
  }

  // Net/gross conversion ratios for every (fuel, technology) in use, plus the
  // reference pair corpus the pipeline will estimate them from.
  std::set<std::pair<FuelType, Technology>> combos;
  for (const auto& units : world.source_units) {
    for (const UnitRecord& unit : units) combos.insert({unit.fueltype, unit.technology});
  }
  for (const auto& [fuel, tech] : combos) {
    double base = 0.86 + 0.08 * rng.uniform();
    double sum = 0.0;
    for (int i = 0; i < 8; ++i) {
      double ratio = base + 0.02 * rng.symmetric();
      double gross = 20.0 + 780.0 * rng.uniform();
      world.paired_corpus.push_back(CapacityPair{fuel, tech, gross * ratio, gross});
      sum += (gross * ratio) / gross;
    }
    world.conversion_ratio[{fuel, tech}] = sum / 8.0;
  }

  // Renewables to concatenate after matching; most have no name at all.
  for (std::size_t i = 0; i < spec.n_renewables; ++i) {
    RenewableRow row;
    bool wind = rng.chance(0.5);
    row.fueltype = wind ? FuelType::Wind : FuelType::Solar;
    row.technology = wind ? (rng.chance(0.8) ? Technology::Onshore : Technology::Offshore)
                          : Technology::PV;
    if (rng.chance(0.3)) {
      row.name = (wind ? "Windpark " : "Solarpark ") +
                 capitalize(rng.pick(kPrefixes) + rng.pick(kSuffixes));
    }
    std::size_t country_index = rng.below(spec.countries.size());
    row.country = spec.countries[country_index];
    row.capacity_mw = random_capacity(rng, wind ? 0.5 : 0.1, wind ? 50.0 : 10.0);
    if (rng.chance(0.6)) row.year = rng.range(2000, spec.year_max);
    if (rng.chance(0.7)) {
      CountryBox box = country_box(country_index);
      row.position = GeoPoint{box.lat0 + rng.uniform() * (box.lat1 - box.lat0),
                              box.lon0 + rng.uniform() * (box.lon1 - box.lon0)};
    }
    row.project_id = "RES-" + std::to_string(1 + i);
    world.renewables.push_back(std::move(row));
  }

  return world;
}

// --- file emission -----------------------------------------------------------

namespace {

struct ColumnStyle {
  const char* name;
  const char* term;
  const char* country;
  const char* capacity;
  const char* year;
  const char* lat;
  const char* lon;
  const char* project_id;
  const char* status;
};

const std::vector<ColumnStyle> kStyles = {
    {"Name", "EnergySource", "Country", "CapacityMW", "Commissioned", "Latitude",
     "Longitude", "UnitID", "Status"},
    {"unit_name", "fuel_tech", "land", "power_mw", "year_online", "lat", "lon",
     "record_id", "status"},
    {"NAME", "CARRIER", "COUNTRY", "MW", "YEAR", "LAT", "LON", "ID", "STATE"},
    {"PlantName", "Type", "Nation", "InstalledMW", "YearBuilt", "Y", "X", "Ref",
     "OpStatus"},
    {"name", "carrier", "country", "capacity", "commissioning_year", "latitude",
     "longitude", "projectid", "status"},
};

const std::vector<std::string> kRetiredTerms = {"shutdown", "decommissioned", "retired"};
const std::vector<std::string> kIntermediateTerms = {"temporary shutdown",
                                                     "security reserve", "special case"};

ordered_json similarity_json(const SimilarityConfig& cfg) {
  ordered_json fields = ordered_json::object();
  for (const FieldSpec& spec : cfg.fields) {
    ordered_json f{{"low", spec.low_prob}, {"high", spec.high_prob}};
    if (spec.field == FieldKind::Geoposition) f["max_distance_km"] = spec.max_distance_km;
    fields[std::string(to_string(spec.field))] = f;
  }
  return ordered_json{{"threshold", cfg.threshold}, {"fields", fields}};
}

}  // namespace

FixtureSummary write_fixture(const FixtureWorld& world,
                             const std::filesystem::path& out_dir) {
  const FixtureSpec& spec = world.spec;
  std::filesystem::create_directories(out_dir);
  SplitMix rng(spec.seed ^ 0xF1C574E5EEDULL);

  FixtureSummary summary;
  summary.n_plants = world.plants.size();
  summary.truth_unit_links = world.truth_links.size();

  ordered_json config;
  config["schema_version"] = 1;
  config["scope"] = spec.countries;
  config["sources"] = ordered_json::array();
  ordered_json scores = ordered_json::object();

  bool any_gross = false;
  for (std::size_t s = 0; s < spec.sources.size(); ++s) {
    const SourcePerturbation& pert = spec.sources[s];
    const ColumnStyle& style = kStyles[s % kStyles.size()];
    any_gross = any_gross || pert.basis == CapacityBasis::Gross;

    // Rows: real units, then noise, then a deterministic shuffle.
    std::map<std::string, TermTriple> terms;
    std::vector<std::vector<std::string>> rows;
    auto term_for = [&](FuelType fuel, Technology tech, SetType set) {
      std::string term = spell_term(s, fuel, tech, set);
      terms[term] = TermTriple{fuel, tech, set};
      return term;
    };
    auto push_row = [&](const std::string& name, const std::string& term,
                        const std::string& country, Decimal capacity,
                        std::optional<int> year, std::optional<GeoPoint> pos,
                        const std::string& id, const std::string& status) {
      rows.push_back({name, term, country, capacity.str(),
                      year ? std::to_string(*year) : "",
                      pos ? csv::format_double(pos->lat) : "",
                      pos ? csv::format_double(pos->lon) : "", id, status});
    };

    for (const UnitRecord& unit : world.source_units[s]) {
      Decimal capacity = unit.capacity_mw;
      if (pert.basis == CapacityBasis::Gross) {
        capacity = capacity.scaled(1.0 / world.conversion_ratio.at(
                                             {unit.fueltype, unit.technology}));
      }
      std::string status = rng.chance(pert.intermediate_prob)
                               ? kIntermediateTerms[rng.below(kIntermediateTerms.size())]
                               : "operating";
      push_row(unit.name, term_for(unit.fueltype, unit.technology, unit.set),
               unit.country, capacity, unit.year_commissioned, unit.position,
               unit.project_id, status);
    }

    for (std::size_t i = 0; i < pert.windsolar_rows; ++i) {
      bool wind = rng.chance(0.5);
      FuelType fuel = wind ? FuelType::Wind : FuelType::Solar;
      Technology tech = wind ? Technology::Onshore : Technology::PV;
      push_row(wind ? "" : "Rooftop array", term_for(fuel, tech, SetType::PP),
               spec.countries[rng.below(spec.countries.size())],
               random_capacity(rng, 0.5, 20.0), std::nullopt, std::nullopt,
               pert.source_id + "-ws" + std::to_string(i + 1), "operating");
    }
    for (std::size_t i = 0; i < pert.out_of_scope_rows; ++i) {
      push_row("Faraway Plant " + std::to_string(i + 1),
               term_for(FuelType::NaturalGas, Technology::Unknown, SetType::PP),
               i % 2 == 0 ? "Turkey" : "Morocco", random_capacity(rng, 10.0, 400.0),
               std::nullopt, std::nullopt,
               pert.source_id + "-os" + std::to_string(i + 1), "operating");
    }
    if (pert.retired_rows > 0 && !world.source_units[s].empty()) {
      for (std::size_t i = 0; i < pert.retired_rows; ++i) {
        const UnitRecord& unit =
            world.source_units[s][rng.below(world.source_units[s].size())];
        push_row(unit.name, term_for(unit.fueltype, unit.technology, unit.set),
                 unit.country, unit.capacity_mw, unit.year_commissioned, unit.position,
                 pert.source_id + "-r" + std::to_string(i + 1),
                 kRetiredTerms[rng.below(kRetiredTerms.size())]);
      }
    }

    for (std::size_t i = rows.size(); i > 1; --i) {
      std::swap(rows[i - 1], rows[rng.below(i)]);
    }

    const std::string filename = pert.source_id + ".csv";
    {
      std::ofstream out(out_dir / filename, std::ios::binary);
      if (!out) throw std::runtime_error("fixture: cannot write " + filename);
      csv::Writer writer(out, pert.delimiter);
      writer.write_row({style.name, style.term, style.country, style.capacity,
                        style.year, style.lat, style.lon, style.project_id,
                        style.status});
      for (const auto& row : rows) writer.write_row(row);
    }
    summary.rows_per_source[pert.source_id] = rows.size();

    ordered_json source_node;
    source_node["id"] = pert.source_id;
    source_node["path"] = filename;
    source_node["delimiter"] = std::string(1, pert.delimiter);
    source_node["capacity_basis"] = std::string(to_string(pert.basis));
    source_node["columns"] = ordered_json{
        {"name", style.name},       {"term", style.term},
        {"country", style.country}, {"capacity", style.capacity},
        {"year", style.year},       {"lat", style.lat},
        {"lon", style.lon},         {"project_id", style.project_id},
        {"status", style.status}};
    ordered_json term_node = ordered_json::object();
    for (const auto& [term, triple] : terms) {
      term_node[term] = {std::string(to_string(triple.fueltype)),
                         std::string(to_string(triple.technology)),
                         std::string(to_string(triple.set))};
    }
    source_node["terms"] = term_node;
    source_node["retired_status"] = kRetiredTerms;
    source_node["intermediate_status"] = kIntermediateTerms;
    config["sources"].push_back(source_node);
    scores[pert.source_id] = pert.score;
  }
  config["scores"] = scores;
  config["similarity"] = ordered_json{
      {"aggregation", similarity_json(SimilarityConfig::aggregation_defaults())},
      {"linkage", similarity_json(SimilarityConfig::linkage_defaults())}};

  // Reference statistics: true capacities of every multi-source plant, plus
  // all renewables. A couple of categories use the aggregated statistical
  // spellings on purpose.
  {
    std::map<std::pair<std::string, FuelType>, Decimal> sums;
    for (const TruePlant& plant : world.plants) {
      if (plant.sources.size() < 2) continue;
      sums[{plant.country, plant.fueltype}] += plant.capacity_mw;
    }
    for (const RenewableRow& row : world.renewables) {
      sums[{row.country, row.fueltype}] += row.capacity_mw;
    }
    std::ofstream out(out_dir / "statistics.csv", std::ios::binary);
    csv::Writer writer(out, ',');
    writer.write_row({"country", "fueltype", "capacity_mw"});
    for (const auto& [key, capacity] : sums) {
      std::string fuel(to_string(key.second));
      if (key.second == FuelType::Bioenergy) fuel = "Bioenergy and other renewable fuels";
      if (key.second == FuelType::Other) fuel = "Other or unspecified energy sources";
      writer.write_row({key.first, fuel, capacity.str()});
    }
  }
  config["statistics"] = "statistics.csv";

  snapshots::write_truth_links(out_dir / "truth_links.csv", world.truth_links);
  config["truth_links"] = "truth_links.csv";

  if (any_gross) {
    std::ofstream out(out_dir / "paired_corpus.csv", std::ios::binary);
    csv::Writer writer(out, ',');
    writer.write_row({"fueltype", "technology", "net_mw", "gross_mw"});
    for (const CapacityPair& pair : world.paired_corpus) {
      writer.write_row({std::string(to_string(pair.fueltype)),
                        std::string(to_string(pair.technology)),
                        csv::format_double(pair.net_mw), csv::format_double(pair.gross_mw)});
    }
    config["rescale"] = ordered_json{{"default_factor", 0.9},
                                     {"paired_corpus", "paired_corpus.csv"}};
  } else {
    config["rescale"] = ordered_json{{"default_factor", 0.9}};
  }

  if (!world.renewables.empty()) {
    std::ofstream out(out_dir / "renewables.csv", std::ios::binary);
    csv::Writer writer(out, ',');
    writer.write_row({"name", "type", "country", "capacity_mw", "year", "lat", "lon", "id"});
    std::map<std::string, TermTriple> res_terms;
    for (const RenewableRow& row : world.renewables) {
      std::string term = spell_term(0, row.fueltype, row.technology, SetType::PP);
      res_terms[term] = TermTriple{row.fueltype, row.technology, SetType::PP};
      writer.write_row({row.name, term, row.country, row.capacity_mw.str(),
                        row.year ? std::to_string(*row.year) : "",
                        row.position ? csv::format_double(row.position->lat) : "",
                        row.position ? csv::format_double(row.position->lon) : "",
                        row.project_id});
    }
    ordered_json renewables_node;
    renewables_node["id"] = "RES";
    renewables_node["path"] = "renewables.csv";
    renewables_node["delimiter"] = ",";
    renewables_node["columns"] =
        ordered_json{{"name", "name"},          {"term", "type"}, {"country", "country"},
                     {"capacity", "capacity_mw"}, {"year", "year"}, {"lat", "lat"},
                     {"lon", "lon"},             {"project_id", "id"}};
    ordered_json term_node = ordered_json::object();
    for (const auto& [term, triple] : res_terms) {
      term_node[term] = {std::string(to_string(triple.fueltype)),
                         std::string(to_string(triple.technology)),
                         std::string(to_string(triple.set))};
    }
    renewables_node["terms"] = term_node;
    config["renewables"] = renewables_node;
  }

  config["output_dir"] = "out";
  config["seed"] = spec.seed;

  summary.config_path = out_dir / "config.json";
  std::ofstream out(summary.config_path, std::ios::binary);
  if (!out) throw std::runtime_error("fixture: cannot write config.json");
  out << config.dump(2) << '\n';
  return summary;
}

}  // namespace fleetmatch
