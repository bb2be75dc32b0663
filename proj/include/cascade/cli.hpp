#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cascade::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kIo = 2 };

/// Everything a command may need; each command reads only its own fields.
struct RunConfig {
  std::optional<std::filesystem::path> topology;
  std::optional<std::filesystem::path> scenario;
  std::vector<std::filesystem::path> strategies;
  std::optional<std::filesystem::path> catalog;
  std::filesystem::path out_dir = "out";
  /// "start:stop:step" for compare.
  std::optional<std::string> sweep_alpha;
  /// Warn about weights outside the two link classes.
  bool paper_fidelity = false;

  // requirements
  std::string component;
  std::optional<std::string> system;
  std::optional<std::string> subject;
  std::optional<std::string> control;
  std::optional<std::string> rationale;
};

/// Writes trace.csv and summary.json.
int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Writes trace_baseline.csv, trace_alternative.csv, comparison.json and,
/// with a sweep, sweep.csv.
int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Writes vulnerability.json.
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Prints one requirement per line.
int cmd_requirements(const RunConfig& config, std::ostream& out,
                     std::ostream& err);

/// Parses `argv` and dispatches to a command.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

struct AlphaRange {
  double start;
  double stop;
  double step;

  /// Inclusive of `stop` up to rounding.
  std::vector<double> points() const;
};

/// Parses "start:stop:step". Throws Error(kSchemaError).
AlphaRange parse_alpha_range(const std::string& text);

}  // namespace cascade::cli
