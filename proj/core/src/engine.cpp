#include "ecosim/engine.hpp"

#include <numeric>

namespace ecosim {

namespace {

RngStream placement_stream(const ScenarioConfig& config) {
  return derive_stream(config.seed, "world.placement");
}

World make_world(const ScenarioConfig& config) {
  RngStream rng = placement_stream(config);
  return generate_world(config, rng);
}

}  // namespace

SimState::SimState(const ScenarioConfig& config)
    : config_(config),
      params_(TradeParams::from(config)),
      world_(make_world(config)),
      position_rng_(derive_stream(config.seed, "agents.position")),
      type_rng_(derive_stream(config.seed, "agents.type")),
      shuffle_rng_(derive_stream(config.seed, "market.shuffle")),
      contact_rng_(derive_stream(config.seed, "market.contacts")) {
  const auto& types = labor_types(config_.labor);
  type_weights_.resize(types.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < types.size(); ++i) {
    acc += config_.type_mix.empty() ? 1.0 : config_.type_mix[i];
    type_weights_[i] = acc;
  }

  agents_.reserve(static_cast<std::size_t>(config_.population));
  for (int i = 0; i < config_.population; ++i) {
    agents_.push_back(spawn_agent(next_id_++, draw_type(type_rng_),
                                  random_position(position_rng_),
                                  params_.amounts));
  }
}

Vec2 SimState::random_position(RngStream& rng) {
  // x before y, always: reordering would silently change every run.
  const double x = rng.uniform(0.0, world_.width());
  const double y = rng.uniform(0.0, world_.height());
  return {x, y};
}

AgentType SimState::draw_type(RngStream& rng) {
  const auto& types = labor_types(config_.labor);
  if (types.size() == 1) return types.front();
  const double u = rng.uniform(0.0, type_weights_.back());
  for (std::size_t i = 0; i < type_weights_.size(); ++i) {
    if (u < type_weights_[i]) return types[i];
  }
  return types.back();
}

int SimState::replace_dead() {
  int deaths = 0;
  for (Agent& a : agents_) {
    if (is_dead(a)) {
      ++deaths;
      escheated_money_ += a.money;
      a = spawn_agent(next_id_++, draw_type(type_rng_),
                      random_position(position_rng_), params_.amounts);
    }
  }
  cumulative_deaths_ += static_cast<std::uint64_t>(deaths);
  return deaths;
}

void SimState::step() {
  for (Agent& a : agents_) a.age += 1;
  for (Agent& a : agents_) gather(a, world_, params_.amounts);
  for (Agent& a : agents_) metabolize(a, params_.amounts);
  const int deaths = replace_dead();

  positions_.resize(agents_.size());
  for (std::size_t i = 0; i < agents_.size(); ++i) positions_[i] = agents_[i].pos;
  const double cell_size =
      params_.contact_radius > 0 ? params_.contact_radius : world_.width();
  index_.build(positions_, world_, cell_size);

  const auto records =
      run_trade_round(agents_, index_, params_, shuffle_rng_, contact_rng_);
  adjust_prices(agents_, params_);

  t_ += 1;
  history_.push_back(collect_step_stats(deaths, static_cast<int>(records.size())));
}

StepStats SimState::collect_step_stats(int deaths, int trades) {
  StepStats s;
  s.t = t_;
  s.deaths = deaths;
  s.trades = trades;

  long long age_sum = 0;
  long long bid_food = 0, ask_food = 0, bid_mineral = 0, ask_mineral = 0;
  for (const Agent& a : agents_) {
    age_sum += a.age;
    s.w_food += a.stock[index_of(ResourceKind::Food)];
    s.w_mineral += a.stock[index_of(ResourceKind::Mineral)];
    s.total_money += a.money;
    bid_food += a.bid_for(ResourceKind::Food);
    ask_food += a.ask_for(ResourceKind::Food);
    bid_mineral += a.bid_for(ResourceKind::Mineral);
    ask_mineral += a.ask_for(ResourceKind::Mineral);
  }
  s.total_money += escheated_money_;

  const double n = static_cast<double>(agents_.size());
  s.mean_age = static_cast<double>(age_sum) / n;
  s.mean_bid_food = static_cast<double>(bid_food) / n;
  s.mean_ask_food = static_cast<double>(ask_food) / n;
  s.mean_bid_mineral = static_cast<double>(bid_mineral) / n;
  s.mean_ask_mineral = static_cast<double>(ask_mineral) / n;

  gdp_ += s.w_food;
  s.gdp = gdp_;
  return s;
}

std::vector<StepStats> run_scenario(const ScenarioConfig& config) {
  validate(config);
  SimState state(config);
  for (int i = 0; i < config.steps; ++i) state.step();
  return state.history();
}

}  // namespace ecosim
