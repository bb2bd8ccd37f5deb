#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ecosim/agent.hpp"
#include "ecosim/spatial_index.hpp"

namespace ecosim {

struct TradeParams {
  double contact_radius = 200.0;
  int max_contacts = 10;
  PriceRegime price_regime = PriceRegime::Free;
  StepAmounts amounts;

  static TradeParams from(const ScenarioConfig& config) {
    return {config.contact_radius, config.model.max_contacts,
            config.price_regime, StepAmounts::from(config.model)};
  }
};

// One executed trade. money_moved is computed as quantity * unit_price and
// both factors are chosen so the product is exact.
struct TradeRecord {
  AgentId buyer = 0;
  AgentId seller = 0;
  ResourceKind resource = ResourceKind::Food;
  double quantity = 0.0;
  int unit_price = 0;
  double money_moved = 0.0;
};

// Pair compatibility: like specialists never trade with each other, everyone
// else may.
bool can_trade(AgentType buyer_kind, AgentType seller_kind);

// Up to max_contacts candidate partners for this buyer, sampled uniformly
// without replacement from the in-radius agents that pass can_trade. The
// returned order is the order in which the buyer will knock.
std::vector<std::uint32_t> select_candidates(std::uint32_t buyer_slot,
                                             std::span<const Agent> agents,
                                             const SpatialIndex& index,
                                             const TradeParams& params,
                                             RngStream& rng);

// Executes one purchase if the seller offers the resource at or below the
// buyer's bid and a positive quantity fits the buyer's money and the
// seller's stock above the reserve. Returns nullopt for a no-trade outcome.
std::optional<TradeRecord> execute_trade(Agent& buyer, Agent& seller,
                                         ResourceKind resource,
                                         const TradeParams& params);

// One trade tournament: buyers in a fresh random order each contact their
// candidates until the first acceptable seller, executing at most one trade.
// Sets failed_buy on buyers that shopped and bought nothing and failed_sell
// on agents that had sellable excess and sold nothing.
std::vector<TradeRecord> run_trade_round(std::span<Agent> agents,
                                         const SpatialIndex& index,
                                         const TradeParams& params,
                                         RngStream& shuffle_rng,
                                         RngStream& contact_rng);

// End-of-step price moves: under free prices a failed sale cuts the ask by
// one unit and a failed purchase raises the bid by one, clamped to [1, 99].
// Fixed prices only clear the flags.
void adjust_prices(std::span<Agent> agents, const TradeParams& params);

}  // namespace ecosim
