#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "ecosim/csv.hpp"
#include "ecosim/scenario_io.hpp"
#include "ecosim/svg.hpp"

namespace ecosim::cli {

namespace fs = std::filesystem;

Command parse_cli(const std::vector<std::string>& args) {
  CLI::App app{"ecosim - two-good agent economy simulator"};
  app.require_subcommand(1);

  RunCommand run_cmd;
  auto* run = app.add_subcommand("run", "Run one scenario and write its time series CSV");
  run->add_option("--scenario", run_cmd.scenario_path, "Scenario JSON file");
  run->add_option("--seed", run_cmd.seed, "Random seed");
  run->add_option("--steps", run_cmd.steps, "Number of steps");
  run->add_option("--radius", run_cmd.radius, "Contact radius in pixels");
  run->add_option("--population", run_cmd.population, "Number of agents");
  run->add_option("--out", run_cmd.out_dir, "Output directory");

  ExperimentCommand exp_cmd;
  auto* experiment = app.add_subcommand(
      "experiment", "Run a replicate experiment and write summary CSVs");
  experiment
      ->add_option("kind", exp_cmd.kind, "Experiment kind: table1, table2 or fig2")
      ->required();
  experiment->add_option("--replicates", exp_cmd.replicates, "Replicates per cell");
  experiment->add_option("--seed", exp_cmd.seed, "Base seed");
  experiment->add_option("--steps", exp_cmd.steps, "Steps per replicate");
  experiment->add_option("--population", exp_cmd.population, "Agents per replicate");
  experiment->add_option("--threads", exp_cmd.threads,
                         "Worker threads (0 = hardware)");
  experiment->add_option("--out", exp_cmd.out_dir, "Output directory");

  PlotCommand plot_cmd;
  auto* plot = app.add_subcommand("plot", "Render a summary CSV as an SVG chart");
  plot->add_option("summary", plot_cmd.summary_csv, "Summary CSV to plot")->required();
  plot->add_option("--out", plot_cmd.out_svg, "Output SVG path");

  std::vector<const char*> argv;
  argv.push_back("ecosim");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw UsageError{app.help(), true};
  } catch (const CLI::ParseError& e) {
    throw UsageError{std::string(e.what()) + "\n\n" + app.help(), false};
  }

  if (run->parsed()) return run_cmd;
  if (experiment->parsed()) return exp_cmd;
  return plot_cmd;
}

namespace {

ScenarioConfig config_for(const RunCommand& cmd) {
  ScenarioConfig config;
  if (cmd.scenario_path) config = load_scenario_file(*cmd.scenario_path);
  if (cmd.seed) config.seed = *cmd.seed;
  if (cmd.steps) config.steps = *cmd.steps;
  if (cmd.radius) config.contact_radius = *cmd.radius;
  if (cmd.population) config.population = *cmd.population;
  validate(config);
  return config;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

// Reads the columns needed for the radius chart back out of a summary CSV.
std::vector<ChartPoint> chart_points_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open summary CSV: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("summary CSV is empty: " + path);
  const auto header = split_csv_line(line);
  auto column = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw ConfigError("summary CSV lacks column '" + name + "': " + path);
  };
  const std::size_t radius_col = column("contact_radius");
  const std::size_t age_col = column("mean_age");
  const std::size_t price_col = column("mean_food_price");

  std::vector<ChartPoint> points;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() < header.size())
      throw ConfigError("malformed summary CSV row: " + line);
    points.push_back({std::stod(fields[radius_col]), std::stod(fields[age_col]),
                      std::stod(fields[price_col])});
  }
  return points;
}

std::vector<ChartPoint> chart_points_from_rows(std::span<const SummaryRow> rows) {
  std::vector<ChartPoint> points;
  points.reserve(rows.size());
  for (const SummaryRow& r : rows) {
    points.push_back({r.contact_radius, r.age.mean, r.food_price.mean});
  }
  return points;
}

int execute_run(const RunCommand& cmd, std::ostream& out) {
  const ScenarioConfig config = config_for(cmd);
  const auto history = run_scenario(config);
  fs::create_directories(cmd.out_dir);
  const std::string path = (fs::path(cmd.out_dir) / "timeseries.csv").string();
  write_timeseries_csv(history, path);
  out << "wrote " << path << " (" << history.size() << " steps)\n";
  return 0;
}

int execute_experiment(const ExperimentCommand& cmd, std::ostream& out) {
  ExperimentOverrides overrides;
  overrides.replicates = cmd.replicates;
  overrides.base_seed = cmd.seed;
  overrides.steps = cmd.steps;
  overrides.population = cmd.population;
  const ExperimentSpec spec =
      build_experiment(parse_experiment_kind(cmd.kind), overrides);

  const auto results = run_replicates(spec, cmd.threads);
  const auto rows = summarize(spec, results);
  const auto tests = run_comparisons(spec, results);

  fs::create_directories(cmd.out_dir);
  const std::string summary_path =
      (fs::path(cmd.out_dir) / (spec.name + "_summary.csv")).string();
  write_summary_csv(rows, tests, summary_path);
  out << "wrote " << summary_path << "\n";
  out << "wrote " << summary_path << ".tests.csv\n";

  if (spec.name == "fig2") {
    const std::string chart_path =
        (fs::path(cmd.out_dir) / "fig2_chart.svg").string();
    render_line_chart_svg(chart_points_from_rows(rows), chart_path);
    out << "wrote " << chart_path << "\n";
  }
  return 0;
}

int execute_plot(const PlotCommand& cmd, std::ostream& out) {
  const auto points = chart_points_from_csv(cmd.summary_csv);
  render_line_chart_svg(points, cmd.out_svg);
  out << "wrote " << cmd.out_svg << "\n";
  return 0;
}

}  // namespace

int execute(const Command& command, std::ostream& out) {
  if (const auto* run = std::get_if<RunCommand>(&command))
    return execute_run(*run, out);
  if (const auto* experiment = std::get_if<ExperimentCommand>(&command))
    return execute_experiment(*experiment, out);
  return execute_plot(std::get<PlotCommand>(command), out);
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  try {
    const Command command = parse_cli(args);
    return execute(command, out);
  } catch (const UsageError& e) {
    if (e.help_requested) {
      out << e.message << "\n";
      return 0;
    }
    err << e.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ecosim::cli
