#include "cascade/propagation.hpp"

#include <algorithm>
#include <cmath>

#include "cascade/error.hpp"

namespace cascade {
namespace {

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

void check_alpha(const std::string& where, double value) {
  if (!in_unit_interval(value))
    throw Error(ErrorCode::kInvalidAlpha,
                where + " = " + std::to_string(value) + " outside [0, 1]");
}

void check_covers(const ImpactState& state, const SosGraph& graph) {
  if (state.impact.size() != graph.size())
    throw Error(ErrorCode::kStateGraphMismatch,
                "state has " + std::to_string(state.impact.size()) +
                    " entries, graph has " + std::to_string(graph.size()) +
                    " nodes");
}

}  // namespace

ImpactState ImpactState::initial(const SosGraph& graph,
                                 std::string_view source, double initial) {
  if (!graph.contains(source))
    throw Error(ErrorCode::kUnknownSource, "'" + std::string(source) + "'");
  if (!(initial > 0.0 && initial <= 1.0))
    throw Error(ErrorCode::kInvalidScenario,
                "initial_impact " + std::to_string(initial) +
                    " outside (0, 1]");
  ImpactState state;
  state.impact.assign(graph.size(), 0.0);
  state.impact[graph.index_of(source)] = initial;
  return state;
}

double ImpactState::at(const SosGraph& graph, std::string_view id) const {
  return impact.at(graph.index_of(id));
}

std::map<NodeId, double> ImpactState::by_id(const SosGraph& graph) const {
  std::map<NodeId, double> out;
  for (std::size_t i = 0; i < impact.size(); ++i)
    out[graph.profile(i).id] = impact[i];
  return out;
}

AlphaAssignment AlphaAssignment::uniform(const SosGraph& graph,
                                         double alpha) {
  check_alpha("alpha", alpha);
  return AlphaAssignment(std::vector<double>(graph.size(), alpha));
}

AlphaAssignment AlphaAssignment::from_map(
    const SosGraph& graph, const std::map<NodeId, double>& values) {
  std::vector<double> dense(graph.size());
  std::vector<bool> set(graph.size(), false);
  for (const auto& [id, alpha] : values) {
    const std::size_t i = graph.index_of(id);
    check_alpha("alpha['" + id + "']", alpha);
    dense[i] = alpha;
    set[i] = true;
  }
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (!set[i])
      throw Error(ErrorCode::kInvalidAlpha,
                  "no alpha for node '" + graph.profile(i).id + "'");
  }
  return AlphaAssignment(std::move(dense));
}

AlphaAssignment AlphaAssignment::from_dense(const SosGraph& graph,
                                            std::vector<double> values) {
  if (values.size() != graph.size())
    throw Error(ErrorCode::kInvalidAlpha,
                std::to_string(values.size()) + " values for " +
                    std::to_string(graph.size()) + " nodes");
  for (std::size_t i = 0; i < values.size(); ++i)
    check_alpha("alpha['" + graph.profile(i).id + "']", values[i]);
  return AlphaAssignment(std::move(values));
}

double AlphaAssignment::at(const SosGraph& graph, std::string_view id) const {
  return values_.at(graph.index_of(id));
}

std::map<NodeId, double> AlphaAssignment::by_id(const SosGraph& graph) const {
  std::map<NodeId, double> out;
  for (std::size_t i = 0; i < values_.size(); ++i)
    out[graph.profile(i).id] = values_[i];
  return out;
}

void Scenario::validate() const {
  if (source.empty())
    throw Error(ErrorCode::kInvalidScenario, "source is empty");
  if (!(initial_impact > 0.0 && initial_impact <= 1.0))
    throw Error(ErrorCode::kInvalidScenario,
                "initial_impact " + std::to_string(initial_impact) +
                    " outside (0, 1]");
  if (!(epsilon > 0.0))
    throw Error(ErrorCode::kInvalidScenario, "epsilon must be positive");
  if (max_steps == 0)
    throw Error(ErrorCode::kInvalidScenario, "max_steps must be positive");
  if (!(affected_threshold > 0.0 && affected_threshold < 1.0))
    throw Error(ErrorCode::kInvalidScenario,
                "affected_threshold " + std::to_string(affected_threshold) +
                    " outside (0, 1)");
}

ImpactState propagate_step_unattenuated(const ImpactState& state,
                                        const SosGraph& graph,
                                        const kernels::KernelTable& kernels) {
  check_covers(state, graph);
  const std::size_t n = graph.size();
  std::vector<double> strongest(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    auto row = graph.neighbor_indices(v);
    auto weights = graph.neighbor_weights(v);
    double best = 0.0;
    for (std::size_t k = 0; k < row.size(); ++k)
      best = std::max(best, weights[k] * state.impact[row[k]]);
    strongest[v] = best;
  }
  ImpactState next;
  next.t = state.t + 1;
  next.impact.resize(n);
  kernels.combine_unattenuated(state.impact, strongest, next.impact);
  return next;
}

ImpactState propagate_step(const ImpactState& state, const SosGraph& graph,
                           const AlphaAssignment& alphas,
                           const kernels::KernelTable& kernels) {
  check_covers(state, graph);
  if (alphas.values().size() != graph.size())
    throw Error(ErrorCode::kStateGraphMismatch,
                "alpha assignment does not cover the graph");
  const std::size_t n = graph.size();
  std::vector<double> incoming(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    auto row = graph.neighbor_indices(v);
    auto weights = graph.neighbor_weights(v);
    double sum = 0.0;
    for (std::size_t k = 0; k < row.size(); ++k)
      sum += weights[k] * state.impact[row[k]];
    incoming[v] = sum;
  }
  ImpactState next;
  next.t = state.t + 1;
  next.impact.resize(n);
  kernels.combine_attenuated(state.impact, alphas.values(), incoming,
                             next.impact);
  return next;
}

PropagationTrace run_scenario(const Scenario& scenario, const SosGraph& graph,
                              const AlphaAssignment& alphas,
                              const kernels::KernelTable& kernels) {
  if (!graph.contains(scenario.source))
    throw Error(ErrorCode::kUnknownSource, "'" + scenario.source + "'");
  scenario.validate();

  PropagationTrace trace;
  trace.states.push_back(
      ImpactState::initial(graph, scenario.source, scenario.initial_impact));
  while (trace.steps_taken < scenario.max_steps) {
    ImpactState next =
        propagate_step(trace.states.back(), graph, alphas, kernels);
    const double change =
        kernels.max_abs_diff(next.impact, trace.states.back().impact);
    trace.states.push_back(std::move(next));
    ++trace.steps_taken;
    if (change < scenario.epsilon) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

std::set<NodeId> affected_nodes(const SosGraph& graph,
                                const ImpactState& state, double threshold) {
  check_covers(state, graph);
  std::set<NodeId> out;
  for (std::size_t i = 0; i < state.impact.size(); ++i) {
    if (state.impact[i] >= threshold) out.insert(graph.profile(i).id);
  }
  return out;
}

double total_impact(const ImpactState& state) {
  double total = 0.0;
  for (double x : state.impact) total += x;
  return total;
}

}  // namespace cascade
