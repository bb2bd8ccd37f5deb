#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ecosim {

// Raised for invalid configurations and malformed input files.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised for filesystem failures; carries the offending path in the message.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The two tradable goods. Food doubles as the tie-break winner wherever a
// scarcer/more-abundant choice lands on equal stocks.
enum class ResourceKind : int { Food = 0, Mineral = 1 };

inline constexpr int kResourceCount = 2;
inline constexpr std::array<ResourceKind, kResourceCount> kAllResources = {
    ResourceKind::Food, ResourceKind::Mineral};

constexpr int index_of(ResourceKind r) { return static_cast<int>(r); }

constexpr ResourceKind other(ResourceKind r) {
  return r == ResourceKind::Food ? ResourceKind::Mineral : ResourceKind::Food;
}

enum class AgentType : int { Omnipotent = 0, Farmer = 1, Miner = 2, Trader = 3 };

enum class LaborStructure : int { OmnipotentOnly = 0, FarmerMiner = 1, FarmerMinerTrader = 2 };

enum class PriceRegime : int { Fixed = 0, Free = 1 };

enum class Layout : int { Heterogeneous = 0, Homogeneous = 1 };

std::string_view to_string(ResourceKind r);
std::string_view to_string(AgentType t);
std::string_view to_string(LaborStructure l);
std::string_view to_string(PriceRegime p);
std::string_view to_string(Layout l);

LaborStructure parse_labor(std::string_view s);
PriceRegime parse_price_regime(std::string_view s);
Layout parse_layout(std::string_view s);

}  // namespace ecosim
