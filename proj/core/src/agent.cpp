#include "ecosim/agent.hpp"

namespace ecosim {

Agent spawn_agent(AgentId id, AgentType kind, Vec2 pos, const StepAmounts& amounts) {
  Agent a;
  a.id = id;
  a.pos = pos;
  a.kind = kind;
  a.age = 0;
  a.money = amounts.initial_money;
  a.initial_money = amounts.initial_money;
  a.stock.fill(amounts.endowment);
  a.bid.fill(amounts.initial_price);
  a.ask.fill(amounts.initial_price);
  return a;
}

bool gathers(AgentType kind, ResourceKind r) {
  switch (kind) {
    case AgentType::Omnipotent: return true;
    case AgentType::Farmer: return r == ResourceKind::Food;
    case AgentType::Miner: return r == ResourceKind::Mineral;
    case AgentType::Trader: return false;
  }
  return false;
}

void gather(Agent& agent, const World& world, const StepAmounts& amounts) {
  const ResourceSet here = world.resources_at(agent.pos);
  for (ResourceKind r : kAllResources) {
    if (here.contains(r) && gathers(agent.kind, r)) {
      agent.stock[index_of(r)] += amounts.gather;
    }
  }
}

void metabolize(Agent& agent, const StepAmounts& amounts) {
  agent.stock[index_of(ResourceKind::Food)] -= amounts.drain;
  agent.stock[index_of(ResourceKind::Mineral)] -= amounts.drain;
}

bool is_dead(const Agent& agent) {
  return agent.stock[index_of(ResourceKind::Food)] <= 0.0 ||
         agent.stock[index_of(ResourceKind::Mineral)] <= 0.0;
}

namespace {

// Scarcer stock, food on ties.
ResourceKind scarcer_of(const Agent& a) {
  return a.stock[index_of(ResourceKind::Mineral)] < a.stock[index_of(ResourceKind::Food)]
             ? ResourceKind::Mineral
             : ResourceKind::Food;
}

// More abundant stock, food on ties.
ResourceKind more_abundant_of(const Agent& a) {
  return a.stock[index_of(ResourceKind::Food)] < a.stock[index_of(ResourceKind::Mineral)]
             ? ResourceKind::Mineral
             : ResourceKind::Food;
}

}  // namespace

std::optional<ResourceKind> demanded_resource(const Agent& agent) {
  if (agent.money < 1.0) return std::nullopt;  // no integer price affordable
  switch (agent.kind) {
    case AgentType::Farmer: return ResourceKind::Mineral;
    case AgentType::Miner: return ResourceKind::Food;
    case AgentType::Omnipotent:
    case AgentType::Trader: return scarcer_of(agent);
  }
  return std::nullopt;
}

bool attempts_to_sell(const Agent& seller, ResourceKind r) {
  switch (seller.kind) {
    case AgentType::Farmer: return r == ResourceKind::Food;
    case AgentType::Miner: return r == ResourceKind::Mineral;
    case AgentType::Omnipotent: return r == more_abundant_of(seller);
    case AgentType::Trader: return true;
  }
  return false;
}

std::optional<ResourceKind> offered_resource(const Agent& seller,
                                             const Agent& partner,
                                             const StepAmounts& amounts) {
  std::optional<ResourceKind> offer;
  switch (seller.kind) {
    case AgentType::Farmer: offer = ResourceKind::Food; break;
    case AgentType::Miner: offer = ResourceKind::Mineral; break;
    case AgentType::Omnipotent: offer = more_abundant_of(seller); break;
    case AgentType::Trader:
      // A trader carries what its counterparty is shopping for.
      switch (partner.kind) {
        case AgentType::Farmer: offer = ResourceKind::Mineral; break;
        case AgentType::Miner: offer = ResourceKind::Food; break;
        case AgentType::Omnipotent:
        case AgentType::Trader: offer = scarcer_of(partner); break;
      }
      break;
  }
  if (!offer) return std::nullopt;
  if (seller.stock[index_of(*offer)] <= amounts.reserve) return std::nullopt;
  return offer;
}

}  // namespace ecosim
