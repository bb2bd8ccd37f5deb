#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "ecosim/amounts.hpp"
#include "ecosim/config.hpp"
#include "ecosim/world.hpp"

namespace ecosim {

using AgentId = std::uint64_t;

// One economic agent. Money and stocks are grid amounts (see amounts.hpp);
// every mutation below keeps them on the grid, which is what makes the
// bookkeeping identity money == initial_money + money_earned - money_spent
// hold exactly at all times.
struct Agent {
  AgentId id = 0;
  Vec2 pos;
  AgentType kind = AgentType::Omnipotent;
  int age = 0;
  double money = 0.0;
  std::array<double, kResourceCount> stock{0.0, 0.0};
  // Integer price thresholds in [1, 99]: bid is the most the agent pays,
  // ask is the price it quotes as a seller.
  std::array<int, kResourceCount> bid{1, 1};
  std::array<int, kResourceCount> ask{1, 1};
  double initial_money = 0.0;
  double money_earned = 0.0;
  double money_spent = 0.0;
  // Set during a trade round, consumed by the end-of-step price adjustment.
  std::array<bool, kResourceCount> failed_buy{false, false};
  std::array<bool, kResourceCount> failed_sell{false, false};

  double stock_of(ResourceKind r) const { return stock[index_of(r)]; }
  int bid_for(ResourceKind r) const { return bid[index_of(r)]; }
  int ask_for(ResourceKind r) const { return ask[index_of(r)]; }
};

// Effective per-step amounts for one scenario, pre-snapped to the amount
// grid. The metabolic drain snaps upward so endowments that are exact
// multiples of it run out on the expected step.
struct StepAmounts {
  double gather = 0.0;
  double drain = 0.0;
  double endowment = 0.0;
  double reserve = 0.0;
  double initial_money = 0.0;
  int initial_price = 3;

  static StepAmounts from(const ModelDefaults& m) {
    StepAmounts a;
    a.gather = snap_amount(m.collection_rate);
    a.drain = ceil_amount(m.metabolism);
    a.endowment = snap_amount(m.endowment);
    a.reserve = snap_amount(m.reserve);
    a.initial_money = snap_amount(m.initial_money);
    a.initial_price = m.initial_price;
    return a;
  }
};

Agent spawn_agent(AgentId id, AgentType kind, Vec2 pos, const StepAmounts& amounts);

// Adds the collection rate to each stock the agent's role can gather and the
// location provides. Traders gather nothing.
void gather(Agent& agent, const World& world, const StepAmounts& amounts);

// Burns the basal drain of both resources. Stocks may go non-positive; the
// death check follows.
void metabolize(Agent& agent, const StepAmounts& amounts);

// An agent dies as soon as either resource is exhausted.
bool is_dead(const Agent& agent);

// The resource this agent shops for, or nullopt when it does not buy this
// step (no need, or less than one unit of money so no integer price is
// affordable). Farmers want minerals, miners want food; omnipotent agents
// and traders restock whichever good they hold less of, food on ties.
std::optional<ResourceKind> demanded_resource(const Agent& agent);

// True when the agent's role can gather r.
bool gathers(AgentType kind, ResourceKind r);

// True when this agent's role puts r on the market at all: specialists sell
// only what they gather, omnipotent agents their more abundant good (food on
// ties), traders anything. Used to decide which failed sales should cut
// prices; actual per-partner offers go through offered_resource.
bool attempts_to_sell(const Agent& seller, ResourceKind r);

// The single good this agent would offer a given partner, or nullopt when
// the chosen good's stock does not exceed the reserve.
std::optional<ResourceKind> offered_resource(const Agent& seller,
                                             const Agent& partner,
                                             const StepAmounts& amounts);

}  // namespace ecosim
