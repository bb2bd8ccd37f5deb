#include "ecosim/experiments.hpp"

#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "ecosim/rng.hpp"

namespace ecosim {

std::vector<ReplicateResult> run_replicates(const ExperimentSpec& spec, int threads) {
  if (spec.replicates < 1) throw ConfigError("replicates must be >= 1");
  for (const auto& cell : spec.cells) {
    if (cell.config.steps < 1)
      throw ConfigError("experiment cell '" + cell.label + "' needs steps >= 1");
  }

  const std::size_t n_cells = spec.cells.size();
  const std::size_t n_jobs = n_cells * static_cast<std::size_t>(spec.replicates);
  std::vector<ReplicateResult> results(n_jobs);

  std::atomic<std::size_t> next_job{0};
  std::mutex failure_mutex;
  std::string failure;

  auto worker = [&]() {
    for (;;) {
      const std::size_t job = next_job.fetch_add(1);
      if (job >= n_jobs) return;
      const std::size_t cell_index = job / static_cast<std::size_t>(spec.replicates);
      const int replicate = static_cast<int>(job % static_cast<std::size_t>(spec.replicates));
      const ExperimentCell& cell = spec.cells[cell_index];
      try {
        ScenarioConfig config = cell.config;
        config.seed = replicate_seed(spec.base_seed, cell.label,
                                     static_cast<std::uint64_t>(replicate));
        const auto history = run_scenario(config);
        const StepStats& last = history.back();
        results[job] = ReplicateResult{cell.label, replicate, last.mean_age,
                                       last.mean_ask_food, last};
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (failure.empty()) {
          failure = "replicate (" + cell.label + ", " +
                    std::to_string(replicate) + ") failed: " + e.what();
        }
        next_job.store(n_jobs);  // drain remaining jobs
        return;
      }
    }
  };

  int n_threads = threads > 0
                      ? threads
                      : static_cast<int>(std::thread::hardware_concurrency());
  if (n_threads < 1) n_threads = 1;
  n_threads = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(n_threads), n_jobs));

  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (!failure.empty()) throw std::runtime_error(failure);
  return results;
}

namespace {

std::vector<double> ages_for_cell(const ExperimentSpec& spec,
                                  std::span<const ReplicateResult> results,
                                  const std::string& label) {
  std::vector<double> ages;
  ages.reserve(static_cast<std::size_t>(spec.replicates));
  for (const auto& r : results) {
    if (r.cell == label) ages.push_back(r.final_mean_age);
  }
  if (ages.empty()) throw ConfigError("no results for cell '" + label + "'");
  return ages;
}

}  // namespace

std::vector<SummaryRow> summarize(const ExperimentSpec& spec,
                                  std::span<const ReplicateResult> results) {
  std::vector<SummaryRow> rows;
  rows.reserve(spec.cells.size());
  for (const auto& cell : spec.cells) {
    std::vector<double> ages;
    std::vector<double> prices;
    for (const auto& r : results) {
      if (r.cell == cell.label) {
        ages.push_back(r.final_mean_age);
        prices.push_back(r.final_mean_ask_food);
      }
    }
    SummaryRow row;
    row.cell = cell.label;
    row.labor = cell.config.labor;
    row.price_regime = cell.config.price_regime;
    row.layout = cell.config.layout;
    row.contact_radius = cell.config.contact_radius;
    row.age = summarize_sample(ages);
    row.food_price = summarize_sample(prices);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<PairTest> run_comparisons(const ExperimentSpec& spec,
                                      std::span<const ReplicateResult> results) {
  std::vector<PairTest> tests;
  tests.reserve(spec.comparisons.size());
  for (const auto& [a, b] : spec.comparisons) {
    const auto sample_a = ages_for_cell(spec, results, a);
    const auto sample_b = ages_for_cell(spec, results, b);
    tests.push_back({a, b, students_t_test(sample_a, sample_b)});
  }
  return tests;
}

namespace {

ScenarioConfig base_config(const ExperimentOverrides& overrides) {
  ScenarioConfig config;
  if (overrides.population) config.population = *overrides.population;
  if (overrides.steps) config.steps = *overrides.steps;
  return config;
}

}  // namespace

ExperimentSpec build_experiment(ExperimentKind kind,
                                const ExperimentOverrides& overrides) {
  ExperimentSpec spec;
  spec.replicates = overrides.replicates.value_or(100);
  spec.base_seed = overrides.base_seed.value_or(42);

  const std::array<LaborStructure, 3> labors = {
      LaborStructure::OmnipotentOnly, LaborStructure::FarmerMiner,
      LaborStructure::FarmerMinerTrader};

  switch (kind) {
    case ExperimentKind::Table1: {
      spec.name = "table1";
      for (PriceRegime regime : {PriceRegime::Fixed, PriceRegime::Free}) {
        for (LaborStructure labor : labors) {
          ScenarioConfig config = base_config(overrides);
          config.labor = labor;
          config.price_regime = regime;
          config.layout = Layout::Heterogeneous;
          spec.cells.push_back(
              {std::string(to_string(regime)) + "_" + std::string(to_string(labor)),
               config});
        }
      }
      for (LaborStructure labor : labors) {
        spec.comparisons.emplace_back(
            "fixed_" + std::string(to_string(labor)),
            "free_" + std::string(to_string(labor)));
      }
      for (const char* regime : {"fixed", "free"}) {
        spec.comparisons.emplace_back(std::string(regime) + "_farmer_miner",
                                      std::string(regime) + "_farmer_miner_trader");
        spec.comparisons.emplace_back(std::string(regime) + "_farmer_miner_trader",
                                      std::string(regime) + "_omnipotent");
        spec.comparisons.emplace_back(std::string(regime) + "_farmer_miner",
                                      std::string(regime) + "_omnipotent");
      }
      break;
    }
    case ExperimentKind::Table2: {
      spec.name = "table2";
      for (LaborStructure labor : labors) {
        ScenarioConfig config = base_config(overrides);
        config.labor = labor;
        config.price_regime = PriceRegime::Free;
        config.layout = Layout::Homogeneous;
        spec.cells.push_back({std::string(to_string(labor)), config});
      }
      spec.comparisons.emplace_back("omnipotent", "farmer_miner");
      spec.comparisons.emplace_back("farmer_miner", "farmer_miner_trader");
      spec.comparisons.emplace_back("omnipotent", "farmer_miner_trader");
      break;
    }
    case ExperimentKind::Fig2: {
      spec.name = "fig2";
      const std::array<double, 5> radii = {25.0, 50.0, 100.0, 200.0, 400.0};
      std::string previous;
      for (double radius : radii) {
        ScenarioConfig config = base_config(overrides);
        config.labor = LaborStructure::FarmerMiner;
        config.price_regime = PriceRegime::Free;
        config.layout = Layout::Heterogeneous;
        config.contact_radius = radius;
        std::string label = "radius_" + std::to_string(static_cast<int>(radius));
        spec.cells.push_back({label, config});
        if (!previous.empty()) spec.comparisons.emplace_back(previous, label);
        previous = label;
      }
      break;
    }
  }
  return spec;
}

ExperimentKind parse_experiment_kind(std::string_view s) {
  if (s == "table1") return ExperimentKind::Table1;
  if (s == "table2") return ExperimentKind::Table2;
  if (s == "fig2") return ExperimentKind::Fig2;
  throw ConfigError("unknown experiment kind: " + std::string(s));
}

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Table1: return "table1";
    case ExperimentKind::Table2: return "table2";
    case ExperimentKind::Fig2: return "fig2";
  }
  return "?";
}

}  // namespace ecosim
