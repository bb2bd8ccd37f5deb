#include "ecosim/market.hpp"

#include <algorithm>

namespace ecosim {

bool can_trade(AgentType buyer_kind, AgentType seller_kind) {
  if (buyer_kind == seller_kind &&
      (buyer_kind == AgentType::Farmer || buyer_kind == AgentType::Miner)) {
    return false;
  }
  return true;
}

std::vector<std::uint32_t> select_candidates(std::uint32_t buyer_slot,
                                             std::span<const Agent> agents,
                                             const SpatialIndex& index,
                                             const TradeParams& params,
                                             RngStream& rng) {
  const Agent& buyer = agents[buyer_slot];
  std::vector<std::uint32_t> pool;
  index.query_radius(buyer.pos, params.contact_radius, pool);

  std::erase_if(pool, [&](std::uint32_t slot) {
    return slot == buyer_slot || !can_trade(buyer.kind, agents[slot].kind);
  });

  // Partial Fisher-Yates: the first k slots become the contact order.
  const std::size_t k =
      std::min(pool.size(), static_cast<std::size_t>(params.max_contacts));
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.uniform_below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

std::optional<TradeRecord> execute_trade(Agent& buyer, Agent& seller,
                                         ResourceKind resource,
                                         const TradeParams& params) {
  const auto offer = offered_resource(seller, buyer, params.amounts);
  if (!offer || *offer != resource) return std::nullopt;

  const int price = seller.ask_for(resource);
  if (buyer.bid_for(resource) < price) return std::nullopt;

  const double sellable = seller.stock[index_of(resource)] - params.amounts.reserve;
  double quantity = floor_amount(std::min(buyer.money / price, sellable));
  // floor_amount works on a rounded division; one grid step covers the case
  // where the product would still overshoot the buyer's purse.
  if (quantity * price > buyer.money) quantity -= kAmountGrid;
  if (quantity <= 0.0) return std::nullopt;

  const double money_moved = quantity * price;  // exact: grid quantity, integer price
  buyer.money -= money_moved;
  buyer.money_spent += money_moved;
  buyer.stock[index_of(resource)] += quantity;
  seller.money += money_moved;
  seller.money_earned += money_moved;
  seller.stock[index_of(resource)] -= quantity;

  return TradeRecord{buyer.id, seller.id, resource, quantity, price, money_moved};
}

std::vector<TradeRecord> run_trade_round(std::span<Agent> agents,
                                         const SpatialIndex& index,
                                         const TradeParams& params,
                                         RngStream& shuffle_rng,
                                         RngStream& contact_rng) {
  std::vector<TradeRecord> records;
  if (agents.empty()) return records;

  std::vector<std::uint32_t> order(agents.size());
  for (std::uint32_t i = 0; i < agents.size(); ++i) order[i] = i;
  shuffle_rng.shuffle(order);

  // sold[slot][r]: executed at least one sale of r this round.
  std::vector<std::array<bool, kResourceCount>> sold(
      agents.size(), {false, false});

  for (std::uint32_t buyer_slot : order) {
    Agent& buyer = agents[buyer_slot];
    const auto wanted = demanded_resource(buyer);
    if (!wanted) continue;

    bool bought = false;
    for (std::uint32_t seller_slot :
         select_candidates(buyer_slot, agents, index, params, contact_rng)) {
      if (auto record = execute_trade(buyer, agents[seller_slot], *wanted, params)) {
        records.push_back(*record);
        sold[seller_slot][index_of(*wanted)] = true;
        bought = true;
        break;  // one executed trade per buyer per step
      }
    }
    if (!bought) buyer.failed_buy[index_of(*wanted)] = true;
  }

  // A failed sale requires actually having been on the market: role willing
  // and stock above the reserve.
  for (std::uint32_t slot = 0; slot < agents.size(); ++slot) {
    Agent& a = agents[slot];
    for (ResourceKind r : kAllResources) {
      if (!sold[slot][index_of(r)] &&
          a.stock[index_of(r)] > params.amounts.reserve &&
          attempts_to_sell(a, r)) {
        a.failed_sell[index_of(r)] = true;
      }
    }
  }
  return records;
}

void adjust_prices(std::span<Agent> agents, const TradeParams& params) {
  for (Agent& a : agents) {
    for (ResourceKind r : kAllResources) {
      const int i = index_of(r);
      if (params.price_regime == PriceRegime::Free) {
        if (a.failed_sell[i]) a.ask[i] = std::max(1, a.ask[i] - 1);
        if (a.failed_buy[i]) a.bid[i] = std::min(99, a.bid[i] + 1);
      }
      a.failed_sell[i] = false;
      a.failed_buy[i] = false;
    }
  }
}

}  // namespace ecosim
