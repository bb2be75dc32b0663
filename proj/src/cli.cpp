#include "cascade/cli.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>

#include "CLI11.hpp"

#include "cascade/analysis.hpp"
#include "cascade/catalog.hpp"
#include "cascade/error.hpp"
#include "cascade/io.hpp"
#include "json_util.hpp"

namespace cascade::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// Usage problems detected after argument parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const fs::path& require(const std::optional<fs::path>& path,
                        const char* flag) {
  if (!path) throw UsageError(std::string("missing required ") + flag);
  return *path;
}

SosGraph load_topology(const RunConfig& config, std::ostream& err) {
  SosGraph graph =
      parse_topology(read_text_file(require(config.topology, "--topology")));
  if (config.paper_fidelity) {
    for (const std::string& warning : fidelity_warnings(graph))
      err << "warning: " << warning << "\n";
  }
  return graph;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw Error(ErrorCode::kIo,
                "cannot create '" + dir.string() + "': " + ec.message());
}

std::string format_fixed(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6f", value);
  return buffer;
}

std::string summary_json(const SosGraph& graph, const Scenario& scenario,
                         const StrategySpec& strategy,
                         const PropagationTrace& trace) {
  const ImpactState& last = trace.final_state();
  const std::set<NodeId> affected =
      affected_nodes(graph, last, scenario.affected_threshold);
  return detail::dump_canonical(
      {{"source", scenario.source},
       {"initial_impact", scenario.initial_impact},
       {"strategy", strategy.name},
       {"affected_threshold", scenario.affected_threshold},
       {"converged", trace.converged},
       {"steps_taken", trace.steps_taken},
       {"affected", affected},
       {"affected_count", affected.size()},
       {"total_impact", total_impact(last)},
       {"final_impact", last.by_id(graph)}});
}

/// Strategy with its protected alpha moved to `alpha`, keeping
/// protected <= unprotected.
StrategySpec at_alpha(StrategySpec strategy, double alpha) {
  strategy.protected_alpha = alpha;
  strategy.unprotected_alpha = std::max(strategy.unprotected_alpha, alpha);
  return strategy;
}

std::string sweep_csv(const SosGraph& graph, const Scenario& scenario,
                      const StrategySpec& baseline,
                      const StrategySpec& alternative,
                      const AlphaRange& range) {
  const std::vector<double> alphas = range.points();
  std::vector<std::future<ComparisonReport>> jobs;
  jobs.reserve(alphas.size());
  for (double alpha : alphas) {
    jobs.push_back(std::async(std::launch::async, [&, alpha] {
      return compare_strategies(graph, scenario, at_alpha(baseline, alpha),
                                at_alpha(alternative, alpha));
    }));
  }
  std::string out =
      "alpha,baseline_affected,alternative_affected,affected_increase_pct,"
      "baseline_total_impact,alternative_total_impact,impact_reduction_pct\n";
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const ComparisonReport report = jobs[i].get();
    out += format_fixed(alphas[i]) + "," +
           std::to_string(report.baseline.affected_count) + "," +
           std::to_string(report.alternative.affected_count) + "," +
           (report.affected_increase_pct
                ? format_fixed(*report.affected_increase_pct)
                : std::string()) +
           "," + format_fixed(report.baseline.total_impact) + "," +
           format_fixed(report.alternative.total_impact) + "," +
           format_fixed(report.impact_reduction_pct) + "\n";
  }
  return out;
}

/// Runs a command body, turning failures into exit codes and diagnostics.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_io() ? kIo : kValidation;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  }
}

}  // namespace

std::vector<double> AlphaRange::points() const {
  std::vector<double> out;
  const auto count =
      static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) {
    // Rounded to 12 decimals so 0.1 + 2 * 0.1 prints and behaves as 0.3.
    const double value = start + static_cast<double>(i) * step;
    out.push_back(std::min(1.0, std::round(value * 1e12) / 1e12));
  }
  return out;
}

AlphaRange parse_alpha_range(const std::string& text) {
  AlphaRange range{};
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &range.start, &range.stop,
                  &range.step, &tail) != 3)
    throw Error(ErrorCode::kSchemaError,
                "sweep range '" + text + "' is not start:stop:step");
  if (!(range.start >= 0.0 && range.stop <= 1.0 && range.start <= range.stop &&
        range.step > 0.0))
    throw Error(ErrorCode::kSchemaError,
                "sweep range '" + text +
                    "' needs 0 <= start <= stop <= 1 and step > 0");
  return range;
}

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.strategies.size() > 1)
      throw UsageError("run takes at most one --strategy");
    const SosGraph graph = load_topology(config, err);
    const fs::path& scenario_path = require(config.scenario, "--scenario");
    const Scenario scenario = parse_scenario(read_text_file(scenario_path));

    fs::path strategy_path;
    if (!config.strategies.empty()) {
      strategy_path = config.strategies.front();
    } else if (scenario.strategy) {
      strategy_path = scenario_path.parent_path() / *scenario.strategy;
    } else {
      throw UsageError("no --strategy given and the scenario names none");
    }
    const StrategySpec strategy = parse_strategy(read_text_file(strategy_path));
    const AlphaAssignment alphas = apply_strategy(strategy, graph);
    if (!graph.contains(scenario.source))
      throw Error(ErrorCode::kUnknownSource, "'" + scenario.source + "'");

    const PropagationTrace trace = run_scenario(scenario, graph, alphas);

    ensure_dir(config.out_dir);
    write_text_file(config.out_dir / "trace.csv", trace_to_csv(graph, trace));
    write_text_file(config.out_dir / "summary.json",
                    summary_json(graph, scenario, strategy, trace));
    out << (trace.converged ? "converged" : "did not converge") << " after "
        << trace.steps_taken << " steps; "
        << affected_nodes(graph, trace.final_state(),
                          scenario.affected_threshold)
               .size()
        << " of " << graph.size() << " nodes affected\n";
    return static_cast<int>(kOk);
  });
}

int cmd_compare(const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    if (config.strategies.size() != 2)
      throw UsageError("compare needs exactly two --strategy files "
                       "(baseline first, alternative second)");
    const SosGraph graph = load_topology(config, err);
    const Scenario scenario = parse_scenario(
        read_text_file(require(config.scenario, "--scenario")));
    const StrategySpec baseline =
        parse_strategy(read_text_file(config.strategies[0]));
    const StrategySpec alternative =
        parse_strategy(read_text_file(config.strategies[1]));
    std::optional<AlphaRange> sweep;
    if (config.sweep_alpha) sweep = parse_alpha_range(*config.sweep_alpha);
    if (!graph.contains(scenario.source))
      throw Error(ErrorCode::kUnknownSource, "'" + scenario.source + "'");

    const ComparisonReport report =
        compare_strategies(graph, scenario, baseline, alternative);
    std::optional<std::string> sweep_rows;
    if (sweep)
      sweep_rows = sweep_csv(graph, scenario, baseline, alternative, *sweep);

    ensure_dir(config.out_dir);
    write_text_file(config.out_dir / "trace_baseline.csv",
                    trace_to_csv(graph, report.baseline.trace));
    write_text_file(config.out_dir / "trace_alternative.csv",
                    trace_to_csv(graph, report.alternative.trace));
    write_text_file(config.out_dir / "comparison.json",
                    comparison_to_json(report));
    if (sweep_rows) write_text_file(config.out_dir / "sweep.csv", *sweep_rows);

    out << report.baseline.strategy << ": "
        << report.baseline.affected_count << " affected, total impact "
        << format_fixed(report.baseline.total_impact) << "\n"
        << report.alternative.strategy << ": "
        << report.alternative.affected_count << " affected, total impact "
        << format_fixed(report.alternative.total_impact) << "\n"
        << "affected increase: "
        << (report.affected_increase_pct
                ? format_fixed(*report.affected_increase_pct) + "%"
                : std::string("undefined"))
        << "\nimpact reduction: " << format_fixed(report.impact_reduction_pct)
        << "%\n";
    return static_cast<int>(kOk);
  });
}

int cmd_analyze(const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const SosGraph graph = load_topology(config, err);
    const VulnerabilityRanking ranking = vulnerability_ranking(graph);
    ensure_dir(config.out_dir);
    write_text_file(config.out_dir / "vulnerability.json",
                    vulnerability_to_json(graph, ranking));
    for (std::size_t i = 0; i < ranking.size(); ++i) {
      const VulnerabilityEntry& e = ranking[i];
      out << i + 1 << ". " << e.id << " articulation="
          << (e.is_articulation ? "yes" : "no")
          << " betweenness=" << format_fixed(e.betweenness)
          << " weighted_degree=" << format_fixed(e.weighted_degree) << "\n";
    }
    return static_cast<int>(kOk);
  });
}

int cmd_requirements(const RunConfig& config, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    if (config.component.empty()) throw UsageError("missing --component");
    const SecurityCatalog catalog =
        load_catalog(read_text_file(require(config.catalog, "--catalog")));
    std::optional<SystemTag> system;
    if (config.system) {
      system = parse_system_tag(*config.system);
      if (!system)
        throw UsageError("unknown --system '" + *config.system +
                         "' (expected OMCV or PPE)");
    }
    // Resolves the component even when a single control is requested.
    catalog.component(config.component);
    const std::string subject = config.subject.value_or(config.component);

    std::vector<Countermeasure> selected;
    if (config.control) {
      selected.push_back(catalog.countermeasure(*config.control));
    } else {
      for (Countermeasure& cm : controls_for(catalog, config.component, system))
        if (cm.is_critical()) selected.push_back(std::move(cm));
    }
    for (const Countermeasure& cm : selected) {
      const std::string rationale =
          config.rationale.value_or(cm.rationale.value_or(""));
      out << generate_requirement(subject, cm, rationale).text << "\n";
    }
    return static_cast<int>(kOk);
  });
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Cascading failure propagation in system-of-systems graphs",
               "cascade"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string topology, scenario, catalog;
  std::vector<std::string> strategies;
  std::string out_dir = "out";
  std::string sweep;

  app.add_option("--topology", topology, "Topology JSON file");
  app.add_option("--scenario", scenario, "Scenario JSON file");
  app.add_option("--strategy", strategies,
                 "Strategy JSON file (twice for compare: baseline, then "
                 "alternative)");
  app.add_option("--catalog", catalog, "Security catalog JSON file");
  app.add_option("-o,--out", out_dir, "Output directory")
      ->capture_default_str();
  app.add_option("--sweep-alpha", sweep,
                 "Also compare at each protected alpha in start:stop:step");
  app.add_flag("--paper-fidelity", config.paper_fidelity,
               "Warn about link weights other than 1.0 and 0.5");

  CLI::App* run_cmd = app.add_subcommand("run", "Run one scenario");
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "Compare a baseline and an alternative");
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Rank structural vulnerability");
  CLI::App* req_cmd = app.add_subcommand(
      "requirements", "Render security requirements for a component");
  req_cmd->add_option("--component", config.component, "Catalog component")
      ->required();
  std::string system, subject, control, rationale;
  req_cmd->add_option("--system", system, "OMCV or PPE");
  req_cmd->add_option("--subject", subject,
                      "Requirement subject (defaults to the component)");
  req_cmd->add_option("--control", control, "Render only this control id");
  req_cmd->add_option("--rationale", rationale,
                      "Purpose clause (defaults to the catalog rationale)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kValidation;
  }

  if (!topology.empty()) config.topology = topology;
  if (!scenario.empty()) config.scenario = scenario;
  if (!catalog.empty()) config.catalog = catalog;
  for (const auto& s : strategies) config.strategies.emplace_back(s);
  config.out_dir = out_dir;
  if (!sweep.empty()) config.sweep_alpha = sweep;
  if (!system.empty()) config.system = system;
  if (!subject.empty()) config.subject = subject;
  if (!control.empty()) config.control = control;
  if (req_cmd->count("--rationale") > 0) config.rationale = rationale;

  if (*run_cmd) return cmd_run(config, out, err);
  if (*compare_cmd) return cmd_compare(config, out, err);
  if (*analyze_cmd) return cmd_analyze(config, out, err);
  return cmd_requirements(config, out, err);
}

}  // namespace cascade::cli
