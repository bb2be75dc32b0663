#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cascade/graph.hpp"
#include "cascade/kernels.hpp"

namespace cascade {

/// Failure impact of every node at one time step.
///
/// `impact[i]` belongs to node index i of the graph the state was built for.
struct ImpactState {
  std::size_t t = 0;
  std::vector<double> impact;

  /// Impact `initial` at `source`, zero elsewhere, t = 0.
  /// Throws Error(kUnknownSource) / Error(kInvalidScenario).
  static ImpactState initial(const SosGraph& graph, std::string_view source,
                             double initial);

  double at(const SosGraph& graph, std::string_view id) const;
  std::map<NodeId, double> by_id(const SosGraph& graph) const;
};

/// Per-node diffusion factor, applied at the receiving node.
class AlphaAssignment {
 public:
  static AlphaAssignment uniform(const SosGraph& graph, double alpha);
  /// `values` must name every node of `graph` and nothing else.
  static AlphaAssignment from_map(const SosGraph& graph,
                                  const std::map<NodeId, double>& values);
  /// Dense values in graph node order; each in [0, 1].
  static AlphaAssignment from_dense(const SosGraph& graph,
                                    std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  double at(const SosGraph& graph, std::string_view id) const;
  std::map<NodeId, double> by_id(const SosGraph& graph) const;

 private:
  explicit AlphaAssignment(std::vector<double> values)
      : values_(std::move(values)) {}
  std::vector<double> values_;
};

inline constexpr double kDefaultEpsilon = 1e-9;
inline constexpr std::size_t kDefaultMaxSteps = 1000;
inline constexpr double kDefaultAffectedThreshold = 0.05;

struct Scenario {
  NodeId source;
  double initial_impact = 1.0;
  /// Name or path of the strategy the scenario is meant to run with.
  std::optional<std::string> strategy;
  double epsilon = kDefaultEpsilon;
  std::size_t max_steps = kDefaultMaxSteps;
  double affected_threshold = kDefaultAffectedThreshold;

  /// Throws Error(kInvalidScenario) naming the bad field.
  void validate() const;
};

struct PropagationTrace {
  std::vector<ImpactState> states;
  bool converged = false;
  std::size_t steps_taken = 0;

  const ImpactState& final_state() const { return states.back(); }
};

/// One synchronous step without attenuation: every node keeps the larger of
/// its own impact and the strongest weighted impact among its neighbors.
ImpactState propagate_step_unattenuated(
    const ImpactState& state, const SosGraph& graph,
    const kernels::KernelTable& kernels = kernels::active_kernels());

/// One synchronous attenuated step:
///   I(v,t+1) = min(1, max(I(v,t), alpha_v * sum_{u in N(v)} W_uv * I(u,t)))
ImpactState propagate_step(
    const ImpactState& state, const SosGraph& graph,
    const AlphaAssignment& alphas,
    const kernels::KernelTable& kernels = kernels::active_kernels());

/// Iterates propagate_step until the max-norm change drops below
/// scenario.epsilon or scenario.max_steps steps have run.
PropagationTrace run_scenario(
    const Scenario& scenario, const SosGraph& graph,
    const AlphaAssignment& alphas,
    const kernels::KernelTable& kernels = kernels::active_kernels());

/// Nodes with impact >= threshold.
std::set<NodeId> affected_nodes(const SosGraph& graph,
                                const ImpactState& state, double threshold);

double total_impact(const ImpactState& state);

}  // namespace cascade
