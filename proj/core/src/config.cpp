#include "ecosim/config.hpp"

#include <string>

namespace ecosim {

std::string_view to_string(ResourceKind r) {
  return r == ResourceKind::Food ? "food" : "mineral";
}

std::string_view to_string(AgentType t) {
  switch (t) {
    case AgentType::Omnipotent: return "omnipotent";
    case AgentType::Farmer: return "farmer";
    case AgentType::Miner: return "miner";
    case AgentType::Trader: return "trader";
  }
  return "?";
}

std::string_view to_string(LaborStructure l) {
  switch (l) {
    case LaborStructure::OmnipotentOnly: return "omnipotent";
    case LaborStructure::FarmerMiner: return "farmer_miner";
    case LaborStructure::FarmerMinerTrader: return "farmer_miner_trader";
  }
  return "?";
}

std::string_view to_string(PriceRegime p) {
  return p == PriceRegime::Fixed ? "fixed" : "free";
}

std::string_view to_string(Layout l) {
  return l == Layout::Heterogeneous ? "heterogeneous" : "homogeneous";
}

LaborStructure parse_labor(std::string_view s) {
  if (s == "omnipotent") return LaborStructure::OmnipotentOnly;
  if (s == "farmer_miner") return LaborStructure::FarmerMiner;
  if (s == "farmer_miner_trader") return LaborStructure::FarmerMinerTrader;
  throw ConfigError("unknown labor structure: " + std::string(s));
}

PriceRegime parse_price_regime(std::string_view s) {
  if (s == "fixed") return PriceRegime::Fixed;
  if (s == "free") return PriceRegime::Free;
  throw ConfigError("unknown price regime: " + std::string(s));
}

Layout parse_layout(std::string_view s) {
  if (s == "heterogeneous") return Layout::Heterogeneous;
  if (s == "homogeneous") return Layout::Homogeneous;
  throw ConfigError("unknown layout: " + std::string(s));
}

const std::vector<AgentType>& labor_types(LaborStructure labor) {
  static const std::vector<AgentType> omnipotent = {AgentType::Omnipotent};
  static const std::vector<AgentType> farmer_miner = {AgentType::Farmer,
                                                      AgentType::Miner};
  static const std::vector<AgentType> farmer_miner_trader = {
      AgentType::Farmer, AgentType::Miner, AgentType::Trader};
  switch (labor) {
    case LaborStructure::OmnipotentOnly: return omnipotent;
    case LaborStructure::FarmerMiner: return farmer_miner;
    case LaborStructure::FarmerMinerTrader: return farmer_miner_trader;
  }
  return omnipotent;
}

void validate(const ScenarioConfig& config) {
  if (config.population < 1) throw ConfigError("population must be >= 1");
  if (config.steps < 0) throw ConfigError("steps must be >= 0");
  if (config.world_width <= 0 || config.world_height <= 0)
    throw ConfigError("world dimensions must be positive");
  if (config.contact_radius < 0) throw ConfigError("contact_radius must be >= 0");
  if (config.patches.food_count < 0 || config.patches.mineral_count < 0)
    throw ConfigError("patch counts must be >= 0");
  if (config.patches.food_size <= 0 || config.patches.mineral_size <= 0)
    throw ConfigError("patch sizes must be positive");
  const auto& m = config.model;
  if (m.collection_rate < 0) throw ConfigError("collection_rate must be >= 0");
  if (m.metabolism < 0) throw ConfigError("metabolism must be >= 0");
  if (m.reserve < 0) throw ConfigError("reserve must be >= 0");
  if (m.initial_money < 0) throw ConfigError("initial_money must be >= 0");
  if (m.initial_price < 1 || m.initial_price > 99)
    throw ConfigError("initial_price must be in [1, 99]");
  if (m.endowment < 0) throw ConfigError("endowment must be >= 0");
  if (m.max_contacts < 1) throw ConfigError("max_contacts must be >= 1");
  if (!config.type_mix.empty()) {
    const auto& types = labor_types(config.labor);
    if (config.type_mix.size() != types.size())
      throw ConfigError("type_mix must have one weight per labor type");
    double sum = 0.0;
    for (double w : config.type_mix) {
      if (w < 0) throw ConfigError("type_mix weights must be >= 0");
      sum += w;
    }
    if (sum <= 0) throw ConfigError("type_mix weights must not all be zero");
  }
}

}  // namespace ecosim
