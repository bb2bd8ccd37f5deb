#pragma once

#include <cstdint>
#include <vector>

#include "ecosim/market.hpp"

namespace ecosim {

// Per-step aggregates, collected after all phases of the step have run.
struct StepStats {
  int t = 0;
  double mean_age = 0.0;
  int deaths = 0;
  int trades = 0;
  double w_food = 0.0;     // summed food stocks
  double w_mineral = 0.0;  // summed mineral stocks
  double total_money = 0.0;
  double gdp = 0.0;  // cumulative summed food stocks
  double mean_bid_food = 0.0;
  double mean_ask_food = 0.0;
  double mean_bid_mineral = 0.0;
  double mean_ask_mineral = 0.0;

  friend bool operator==(const StepStats&, const StepStats&) = default;
};

// Full state of one running simulation. One logical writer; whole states may
// move between threads, and distinct simulations never share mutable state.
class SimState {
 public:
  explicit SimState(const ScenarioConfig& config);

  // Executes one step in fixed phase order: age, gather, metabolize,
  // death/replacement, index rebuild, trade round, price adjustment, stats.
  void step();

  const ScenarioConfig& config() const { return config_; }
  const World& world() const { return world_; }
  const std::vector<Agent>& agents() const { return agents_; }
  std::vector<Agent>& agents() { return agents_; }
  int t() const { return t_; }
  const std::vector<StepStats>& history() const { return history_; }
  // Balances that left the economy with eliminated agents. Counted inside
  // total_money so the ledger  total = population*initial + initial*deaths
  // stays exact: each replacement injects one fresh grant and destroys
  // nothing.
  double escheated_money() const { return escheated_money_; }
  std::uint64_t cumulative_deaths() const { return cumulative_deaths_; }

 private:
  int replace_dead();
  StepStats collect_step_stats(int deaths, int trades);
  Vec2 random_position(RngStream& rng);
  AgentType draw_type(RngStream& rng);

  ScenarioConfig config_;
  TradeParams params_;
  World world_;
  std::vector<Agent> agents_;
  SpatialIndex index_;
  std::vector<Vec2> positions_;  // scratch for index rebuilds
  int t_ = 0;
  double gdp_ = 0.0;
  double escheated_money_ = 0.0;
  std::uint64_t cumulative_deaths_ = 0;
  AgentId next_id_ = 0;
  std::vector<StepStats> history_;
  std::vector<double> type_weights_;  // cumulative, aligned with labor_types
  RngStream position_rng_;
  RngStream type_rng_;
  RngStream shuffle_rng_;
  RngStream contact_rng_;
};

// Runs a full scenario and returns the per-step statistics history. A pure
// function of the configuration (including its seed).
std::vector<StepStats> run_scenario(const ScenarioConfig& config);

}  // namespace ecosim
