#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cascade {

using NodeId = std::string;

/// Module categories of a system-of-systems inventory.
enum class NodeKind { kCore, kAuxiliaryPower, kDocking };

std::string_view to_string(NodeKind kind) noexcept;
/// Parses "core" | "auxiliary_power" | "docking".
std::optional<NodeKind> parse_node_kind(std::string_view text) noexcept;

struct NodeProfile {
  NodeId id;
  /// Absent when a topology carries no kind metadata.
  std::optional<NodeKind> kind;
  std::string label;
};

/// Undirected weighted link. Endpoint order carries no meaning.
struct Edge {
  NodeId a;
  NodeId b;
  double weight = 1.0;
};

/// Weight of direct, fixed physical links.
inline constexpr double kFixedLinkWeight = 1.0;
/// Weight of auxiliary dependencies such as robotic interactions.
inline constexpr double kAuxiliaryLinkWeight = 0.5;

struct Neighbor {
  NodeId id;
  double weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Immutable undirected weighted graph G = (V, E, W).
///
/// Nodes keep the order they were given in; each node is addressed either by
/// its id or by its dense index in [0, size()). Adjacency is held in
/// compressed-row form so propagation kernels can stream over it.
class SosGraph {
 public:
  std::size_t size() const noexcept { return profiles_.size(); }
  const std::vector<NodeProfile>& profiles() const noexcept {
    return profiles_;
  }
  const NodeProfile& profile(std::size_t index) const {
    return profiles_.at(index);
  }
  /// Edges in the order given at construction.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  bool contains(std::string_view id) const noexcept;
  /// Throws Error(kUnknownNode).
  std::size_t index_of(std::string_view id) const;

  /// CSR row of node `index`: neighbor indices and parallel weights.
  std::span<const std::size_t> neighbor_indices(std::size_t index) const {
    return {adj_index_.data() + offsets_[index],
            offsets_[index + 1] - offsets_[index]};
  }
  std::span<const double> neighbor_weights(std::size_t index) const {
    return {adj_weight_.data() + offsets_[index],
            offsets_[index + 1] - offsets_[index]};
  }

  /// Weight of the edge between two nodes, if present.
  std::optional<double> weight_between(std::size_t u, std::size_t v) const;

 private:
  friend SosGraph build_graph(std::vector<NodeProfile> profiles,
                              std::vector<Edge> edges);

  std::vector<NodeProfile> profiles_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> adj_index_;
  std::vector<double> adj_weight_;
};

/// Validates and builds a graph.
///
/// Rejects an empty node list, duplicate or empty ids, self-loops, dangling
/// endpoints, repeated node pairs and weights outside (0, 1]. The thrown
/// Error names the offending element.
SosGraph build_graph(std::vector<NodeProfile> profiles,
                     std::vector<Edge> edges);

/// Adjacent nodes with edge weights, sorted by id.
std::vector<Neighbor> neighbors(const SosGraph& graph, std::string_view id);

double weighted_degree(const SosGraph& graph, std::string_view id);

/// Nodes whose removal increases the number of connected components.
/// Weights are ignored.
std::set<NodeId> articulation_points(const SosGraph& graph);

/// Unweighted shortest-path betweenness normalized by (n-1)(n-2)/2.
std::map<NodeId, double> betweenness_centrality(const SosGraph& graph);

/// Weights that fall outside the two classes {1.0, 0.5}; one message per
/// offending edge. Empty for a graph faithful to the two-class convention.
std::vector<std::string> fidelity_warnings(const SosGraph& graph);

/// Number of connected components, optionally pretending `removed` is gone.
std::size_t count_components(const SosGraph& graph,
                             std::optional<std::size_t> removed = {});

/// Largest hop distance between two nodes of the same component.
std::size_t diameter(const SosGraph& graph);

}  // namespace cascade
