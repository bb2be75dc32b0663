#include "cascade/analysis.hpp"

#include <algorithm>
#include <future>

#include "cascade/error.hpp"
#include "json_util.hpp"

namespace cascade {

using nlohmann::json;

namespace {

StrategyOutcome evaluate(const SosGraph& graph, const Scenario& scenario,
                         const StrategySpec& strategy,
                         const kernels::KernelTable& kernels) {
  StrategyOutcome outcome;
  outcome.strategy = strategy.name;
  outcome.trace =
      run_scenario(scenario, graph, apply_strategy(strategy, graph), kernels);
  outcome.affected = affected_nodes(graph, outcome.trace.final_state(),
                                    scenario.affected_threshold);
  outcome.affected_count = outcome.affected.size();
  outcome.total_impact = total_impact(outcome.trace.final_state());
  return outcome;
}

bool same_pair(const Edge& e, const Edge& f) {
  return (e.a == f.a && e.b == f.b) || (e.a == f.b && e.b == f.a);
}

json outcome_to_json(const StrategyOutcome& outcome) {
  return {{"strategy", outcome.strategy},
          {"affected_count", outcome.affected_count},
          {"affected", outcome.affected},
          {"total_impact", outcome.total_impact},
          {"converged", outcome.trace.converged},
          {"steps_taken", outcome.trace.steps_taken}};
}

json edges_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges)
    out.push_back({{"a", e.a}, {"b", e.b}, {"weight", e.weight}});
  return out;
}

}  // namespace

ComparisonReport compare_strategies(const SosGraph& graph,
                                    const Scenario& scenario,
                                    const StrategySpec& baseline,
                                    const StrategySpec& alternative,
                                    const kernels::KernelTable& kernels) {
  // Validate both strategies up front so a bad alternative is reported
  // before any work is spent on the baseline.
  apply_strategy(baseline, graph);
  apply_strategy(alternative, graph);

  auto alt_future = std::async(std::launch::async, [&] {
    return evaluate(graph, scenario, alternative, kernels);
  });
  ComparisonReport report;
  report.baseline = evaluate(graph, scenario, baseline, kernels);
  report.alternative = alt_future.get();

  const double base = static_cast<double>(report.baseline.affected_count);
  const double alt = static_cast<double>(report.alternative.affected_count);
  if (base > 0.0) {
    report.affected_increase_pct = 100.0 * (alt - base) / base;
  } else if (alt == 0.0) {
    report.affected_increase_pct = 0.0;
  }
  const double alt_total = report.alternative.total_impact;
  if (alt_total > 0.0) {
    report.impact_reduction_pct =
        100.0 * (alt_total - report.baseline.total_impact) / alt_total;
  }
  return report;
}

VulnerabilityRanking vulnerability_ranking(const SosGraph& graph) {
  const std::set<NodeId> cuts = articulation_points(graph);
  const std::map<NodeId, double> centrality = betweenness_centrality(graph);

  VulnerabilityRanking ranking;
  ranking.reserve(graph.size());
  for (const NodeProfile& p : graph.profiles()) {
    ranking.push_back({p.id, weighted_degree(graph, p.id),
                       centrality.at(p.id), cuts.contains(p.id)});
  }
  std::sort(ranking.begin(), ranking.end(),
            [](const VulnerabilityEntry& x, const VulnerabilityEntry& y) {
              if (x.is_articulation != y.is_articulation)
                return x.is_articulation;
              if (x.betweenness != y.betweenness)
                return x.betweenness > y.betweenness;
              if (x.weighted_degree != y.weighted_degree)
                return x.weighted_degree > y.weighted_degree;
              return x.id < y.id;
            });
  return ranking;
}

ContainmentReport containment_feasibility(const SosGraph& graph,
                                          const NodeId& node,
                                          const std::vector<Edge>& must_keep) {
  const std::size_t v = graph.index_of(node);
  ContainmentReport report;
  report.node = node;
  auto row = graph.neighbor_indices(v);
  auto weights = graph.neighbor_weights(v);
  for (std::size_t k = 0; k < row.size(); ++k) {
    Edge incident{node, graph.profile(row[k]).id, weights[k]};
    const bool keep =
        std::any_of(must_keep.begin(), must_keep.end(),
                    [&](const Edge& e) { return same_pair(e, incident); });
    (keep ? report.mandatory : report.removable).push_back(std::move(incident));
  }
  report.feasible = report.mandatory.empty();
  return report;
}

SosGraph without_edges(const SosGraph& graph,
                       const std::vector<Edge>& removed) {
  std::vector<Edge> kept;
  for (const Edge& e : graph.edges()) {
    const bool drop =
        std::any_of(removed.begin(), removed.end(),
                    [&](const Edge& r) { return same_pair(e, r); });
    if (!drop) kept.push_back(e);
  }
  return build_graph(graph.profiles(), std::move(kept));
}

std::string comparison_to_json(const ComparisonReport& report) {
  json root = {{"baseline", outcome_to_json(report.baseline)},
               {"alternative", outcome_to_json(report.alternative)},
               {"impact_reduction_pct", report.impact_reduction_pct}};
  root["affected_increase_pct"] =
      report.affected_increase_pct ? json(*report.affected_increase_pct)
                                   : json(nullptr);
  return detail::dump_canonical(root);
}

std::string vulnerability_to_json(const SosGraph& graph,
                                  const VulnerabilityRanking& ranking) {
  json entries = json::array();
  json betweenness = json::object();
  json degree = json::object();
  std::vector<NodeId> cuts;
  for (std::size_t rank = 0; rank < ranking.size(); ++rank) {
    const VulnerabilityEntry& e = ranking[rank];
    entries.push_back({{"rank", rank + 1},
                       {"id", e.id},
                       {"weighted_degree", e.weighted_degree},
                       {"betweenness", e.betweenness},
                       {"is_articulation", e.is_articulation}});
    betweenness[e.id] = e.betweenness;
    degree[e.id] = e.weighted_degree;
    if (e.is_articulation) cuts.push_back(e.id);
  }
  std::sort(cuts.begin(), cuts.end());
  return detail::dump_canonical({{"node_count", graph.size()},
                                 {"ranking", entries},
                                 {"articulation_points", cuts},
                                 {"betweenness", betweenness},
                                 {"weighted_degree", degree}});
}

std::string containment_to_json(const ContainmentReport& report) {
  return detail::dump_canonical({{"node", report.node},
                                 {"feasible", report.feasible},
                                 {"removable", edges_to_json(report.removable)},
                                 {"mandatory",
                                  edges_to_json(report.mandatory)}});
}

}  // namespace cascade
