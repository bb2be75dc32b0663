#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cascade/catalog.hpp"
#include "cascade/graph.hpp"
#include "cascade/propagation.hpp"

namespace cascade {

struct StrategyOutcome {
  std::string strategy;
  std::size_t affected_count = 0;
  std::set<NodeId> affected;
  /// Sum of converged node impacts.
  double total_impact = 0.0;
  PropagationTrace trace;
};

struct ComparisonReport {
  StrategyOutcome baseline;
  StrategyOutcome alternative;
  /// 100 * (alt - base) / base over affected counts; empty when the
  /// baseline affects nothing while the alternative does.
  std::optional<double> affected_increase_pct;
  /// 100 * (alt_total - base_total) / alt_total; 0 when alt_total is 0.
  double impact_reduction_pct = 0.0;
};

/// Runs `scenario` under both strategies and compares the converged states
/// at the scenario's affected threshold. The two runs execute concurrently.
ComparisonReport compare_strategies(
    const SosGraph& graph, const Scenario& scenario,
    const StrategySpec& baseline, const StrategySpec& alternative,
    const kernels::KernelTable& kernels = kernels::active_kernels());

struct VulnerabilityEntry {
  NodeId id;
  double weighted_degree = 0.0;
  double betweenness = 0.0;
  bool is_articulation = false;
};

/// Ordered most to least vulnerable: articulation points first, then by
/// betweenness, weighted degree (both descending) and id (ascending).
using VulnerabilityRanking = std::vector<VulnerabilityEntry>;

VulnerabilityRanking vulnerability_ranking(const SosGraph& graph);

struct ContainmentReport {
  NodeId node;
  /// True when every incident edge may be cut.
  bool feasible = true;
  std::vector<Edge> removable;
  std::vector<Edge> mandatory;
};

/// Whether `node` can be cut off from all neighbors without removing any
/// edge in `must_keep` (matched by unordered endpoints; weights ignored).
ContainmentReport containment_feasibility(const SosGraph& graph,
                                          const NodeId& node,
                                          const std::vector<Edge>& must_keep);

/// Copy of `graph` without `removed` (matched by unordered endpoints).
SosGraph without_edges(const SosGraph& graph, const std::vector<Edge>& removed);

/// JSON renderings with stable key order.
std::string comparison_to_json(const ComparisonReport& report);
std::string vulnerability_to_json(const SosGraph& graph,
                                  const VulnerabilityRanking& ranking);
std::string containment_to_json(const ContainmentReport& report);

}  // namespace cascade
