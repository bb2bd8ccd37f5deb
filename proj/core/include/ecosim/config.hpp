#pragma once

#include <cstdint>
#include <vector>

#include "ecosim/types.hpp"

namespace ecosim {

// Resource field geometry for heterogeneous layouts. Patches are squares;
// food fields are three times the side of mineral fields by default.
struct PatchSpec {
  int food_count = 1;
  double food_size = 300.0;
  int mineral_count = 1;
  double mineral_size = 100.0;

  friend bool operator==(const PatchSpec&, const PatchSpec&) = default;
};

// Per-agent model constants.
struct ModelDefaults {
  double collection_rate = 2.0;  // units gathered per eligible resource per step
  double metabolism = 0.1;       // units of each resource burned per step
  double reserve = 1.0;          // stock a seller never trades away
  double initial_money = 10.0;
  int initial_price = 3;         // starting bid and ask for both resources
  double endowment = 1.0;        // starting stock of each resource
  int max_contacts = 10;         // partners a buyer may contact per step

  friend bool operator==(const ModelDefaults&, const ModelDefaults&) = default;
};

// Full description of one simulation run.
struct ScenarioConfig {
  LaborStructure labor = LaborStructure::FarmerMiner;
  PriceRegime price_regime = PriceRegime::Free;
  Layout layout = Layout::Heterogeneous;
  double contact_radius = 200.0;
  int population = 500;
  int steps = 200;
  std::uint64_t seed = 1;
  double world_width = 600.0;
  double world_height = 600.0;
  PatchSpec patches;
  ModelDefaults model;
  // Weights over labor_types(labor) used for initial and replacement type
  // draws. Empty means uniform.
  std::vector<double> type_mix;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// Agent types participating in a labor structure, in a fixed order.
const std::vector<AgentType>& labor_types(LaborStructure labor);

// Throws ConfigError naming the offending field.
void validate(const ScenarioConfig& config);

}  // namespace ecosim
