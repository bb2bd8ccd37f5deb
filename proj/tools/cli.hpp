#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace ecosim::cli {

struct RunCommand {
  std::optional<std::string> scenario_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> steps;
  std::optional<double> radius;
  std::optional<int> population;
  std::string out_dir = ".";
};

struct ExperimentCommand {
  std::string kind;  // table1 | table2 | fig2
  std::optional<int> replicates;
  std::optional<std::uint64_t> seed;
  std::optional<int> steps;
  std::optional<int> population;
  int threads = 0;
  std::string out_dir = ".";
};

struct PlotCommand {
  std::string summary_csv;
  std::string out_svg = "chart.svg";
};

using Command = std::variant<RunCommand, ExperimentCommand, PlotCommand>;

// Thrown for malformed command lines; the driver prints usage and exits 2.
struct UsageError {
  std::string message;
  bool help_requested = false;
};

// Parses a full argv (excluding the program name) into a command.
Command parse_cli(const std::vector<std::string>& args);

// Executes one parsed command, writing progress to out. Returns an exit code.
int execute(const Command& command, std::ostream& out);

// Full driver: parse + execute with the documented exit codes
// (0 success, 1 runtime error, 2 usage error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ecosim::cli
