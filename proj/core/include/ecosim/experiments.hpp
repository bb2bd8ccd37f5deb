#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecosim/engine.hpp"
#include "ecosim/stats.hpp"

namespace ecosim {

struct ExperimentCell {
  std::string label;
  ScenarioConfig config;
};

// A replicate grid: every cell runs `replicates` times with per-replicate
// seeds derived from (base_seed, label, index), so cell order never affects
// any result.
struct ExperimentSpec {
  std::string name;
  std::vector<ExperimentCell> cells;
  int replicates = 100;
  std::uint64_t base_seed = 42;
  // Pairs of cell labels whose final mean ages get a significance test.
  std::vector<std::pair<std::string, std::string>> comparisons;
};

struct ReplicateResult {
  std::string cell;
  int replicate = 0;
  double final_mean_age = 0.0;
  double final_mean_ask_food = 0.0;
  StepStats final_stats;
};

// Per-cell replicate statistics for the summary table.
struct SummaryRow {
  std::string cell;
  LaborStructure labor = LaborStructure::OmnipotentOnly;
  PriceRegime price_regime = PriceRegime::Free;
  Layout layout = Layout::Heterogeneous;
  double contact_radius = 0.0;
  SampleSummary age;
  SampleSummary food_price;
};

struct PairTest {
  std::string cell_a;
  std::string cell_b;
  TTestResult result;
};

// Runs every (cell, replicate) job, optionally across threads (0 picks the
// hardware count). Output is always ordered by (cell, replicate) regardless
// of scheduling. A failing replicate aborts with its (cell, index) named.
std::vector<ReplicateResult> run_replicates(const ExperimentSpec& spec,
                                            int threads = 0);

// Collapses replicate results into one row per cell, in cell order.
std::vector<SummaryRow> summarize(const ExperimentSpec& spec,
                                  std::span<const ReplicateResult> results);

// Runs the spec's declared comparisons on final mean age samples.
std::vector<PairTest> run_comparisons(const ExperimentSpec& spec,
                                      std::span<const ReplicateResult> results);

enum class ExperimentKind { Table1, Table2, Fig2 };

struct ExperimentOverrides {
  std::optional<int> replicates;
  std::optional<std::uint64_t> base_seed;
  std::optional<int> population;
  std::optional<int> steps;
};

// The three canonical experiment grids:
//  Table1 - fixed/free prices x three labor structures, heterogeneous.
//  Table2 - free prices x three labor structures, homogeneous.
//  Fig2   - free prices, farmers+miners, contact radius sweep
//           {25, 50, 100, 200, 400}.
ExperimentSpec build_experiment(ExperimentKind kind,
                                const ExperimentOverrides& overrides = {});

ExperimentKind parse_experiment_kind(std::string_view s);
std::string_view to_string(ExperimentKind kind);

}  // namespace ecosim
