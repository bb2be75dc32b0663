#include "cascade/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "cascade/error.hpp"

namespace cascade {

std::string_view to_string(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::kCore: return "core";
    case NodeKind::kAuxiliaryPower: return "auxiliary_power";
    case NodeKind::kDocking: return "docking";
  }
  return "core";
}

std::optional<NodeKind> parse_node_kind(std::string_view text) noexcept {
  if (text == "core") return NodeKind::kCore;
  if (text == "auxiliary_power") return NodeKind::kAuxiliaryPower;
  if (text == "docking") return NodeKind::kDocking;
  return std::nullopt;
}

bool SosGraph::contains(std::string_view id) const noexcept {
  return index_.find(std::string(id)) != index_.end();
}

std::size_t SosGraph::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end())
    throw Error(ErrorCode::kUnknownNode, "'" + std::string(id) + "'");
  return it->second;
}

std::optional<double> SosGraph::weight_between(std::size_t u,
                                               std::size_t v) const {
  auto row = neighbor_indices(u);
  auto weights = neighbor_weights(u);
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k] == v) return weights[k];
  }
  return std::nullopt;
}

SosGraph build_graph(std::vector<NodeProfile> profiles,
                     std::vector<Edge> edges) {
  if (profiles.empty())
    throw Error(ErrorCode::kEmptyGraph, "topology has no nodes");

  SosGraph graph;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const NodeId& id = profiles[i].id;
    if (id.empty())
      throw Error(ErrorCode::kSchemaError,
                  "node #" + std::to_string(i) + " has an empty id");
    if (!graph.index_.emplace(id, i).second)
      throw Error(ErrorCode::kDuplicateNode, "'" + id + "'");
  }

  const std::size_t n = profiles.size();
  std::vector<std::vector<std::pair<std::size_t, double>>> rows(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Edge& e : edges) {
    const std::string name = "'" + e.a + "' -- '" + e.b + "'";
    if (e.a == e.b) throw Error(ErrorCode::kSelfLoop, name);
    auto ia = graph.index_.find(e.a);
    auto ib = graph.index_.find(e.b);
    if (ia == graph.index_.end())
      throw Error(ErrorCode::kDanglingEdge, name + " (no node '" + e.a + "')");
    if (ib == graph.index_.end())
      throw Error(ErrorCode::kDanglingEdge, name + " (no node '" + e.b + "')");
    // Negated comparison also rejects NaN.
    if (!(e.weight > 0.0 && e.weight <= 1.0))
      throw Error(ErrorCode::kInvalidWeight,
                  name + " weight " + std::to_string(e.weight) +
                      " outside (0, 1]");
    auto key = std::minmax(ia->second, ib->second);
    if (!seen.insert(key).second)
      throw Error(ErrorCode::kDuplicateEdge, name);
    rows[ia->second].emplace_back(ib->second, e.weight);
    rows[ib->second].emplace_back(ia->second, e.weight);
  }

  graph.offsets_.reserve(n + 1);
  graph.offsets_.push_back(0);
  for (auto& row : rows) {
    std::sort(row.begin(), row.end());
    for (const auto& [v, w] : row) {
      graph.adj_index_.push_back(v);
      graph.adj_weight_.push_back(w);
    }
    graph.offsets_.push_back(graph.adj_index_.size());
  }
  graph.profiles_ = std::move(profiles);
  graph.edges_ = std::move(edges);
  return graph;
}

std::vector<Neighbor> neighbors(const SosGraph& graph, std::string_view id) {
  const std::size_t v = graph.index_of(id);
  auto row = graph.neighbor_indices(v);
  auto weights = graph.neighbor_weights(v);
  std::vector<Neighbor> out;
  out.reserve(row.size());
  for (std::size_t k = 0; k < row.size(); ++k)
    out.push_back({graph.profile(row[k]).id, weights[k]});
  std::sort(out.begin(), out.end(),
            [](const Neighbor& x, const Neighbor& y) { return x.id < y.id; });
  return out;
}

double weighted_degree(const SosGraph& graph, std::string_view id) {
  double total = 0.0;
  for (double w : graph.neighbor_weights(graph.index_of(id))) total += w;
  return total;
}

namespace {

/// Hopcroft-Tarjan low-link search, iterative to keep deep paths off the
/// call stack.
class ArticulationSearch {
 public:
  explicit ArticulationSearch(const SosGraph& graph)
      : graph_(graph),
        order_(graph.size(), kUnvisited),
        low_(graph.size(), 0),
        is_cut_(graph.size(), false) {}

  std::vector<bool> run() {
    for (std::size_t root = 0; root < graph_.size(); ++root) {
      if (order_[root] == kUnvisited) visit(root);
    }
    return is_cut_;
  }

 private:
  static constexpr std::size_t kUnvisited =
      std::numeric_limits<std::size_t>::max();

  struct Frame {
    std::size_t node;
    std::size_t parent;
    std::size_t next_edge;
  };

  void visit(std::size_t root) {
    std::size_t root_children = 0;
    std::vector<Frame> stack{{root, kUnvisited, 0}};
    order_[root] = low_[root] = counter_++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      auto row = graph_.neighbor_indices(top.node);
      if (top.next_edge < row.size()) {
        const std::size_t next = row[top.next_edge++];
        if (next == top.parent) continue;
        if (order_[next] == kUnvisited) {
          order_[next] = low_[next] = counter_++;
          if (top.node == root) ++root_children;
          stack.push_back({next, top.node, 0});
        } else {
          low_[top.node] = std::min(low_[top.node], order_[next]);
        }
        continue;
      }
      const Frame done = top;
      stack.pop_back();
      if (stack.empty()) break;
      const std::size_t parent = stack.back().node;
      low_[parent] = std::min(low_[parent], low_[done.node]);
      if (parent != root && low_[done.node] >= order_[parent])
        is_cut_[parent] = true;
    }
    if (root_children > 1) is_cut_[root] = true;
  }

  const SosGraph& graph_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> low_;
  std::vector<bool> is_cut_;
  std::size_t counter_ = 0;
};

}  // namespace

std::set<NodeId> articulation_points(const SosGraph& graph) {
  std::vector<bool> cut = ArticulationSearch(graph).run();
  std::set<NodeId> out;
  for (std::size_t v = 0; v < graph.size(); ++v) {
    if (cut[v]) out.insert(graph.profile(v).id);
  }
  return out;
}

std::map<NodeId, double> betweenness_centrality(const SosGraph& graph) {
  // Brandes accumulation over BFS shortest-path DAGs.
  const std::size_t n = graph.size();
  std::vector<double> score(n, 0.0);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<long> dist(n);
  std::vector<std::vector<std::size_t>> preds(n);
  std::vector<std::size_t> order;
  order.reserve(n);

  for (std::size_t s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1L);
    for (auto& p : preds) p.clear();
    order.clear();

    sigma[s] = 1.0;
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (std::size_t w : graph.neighbor_indices(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t w = *it;
      for (std::size_t v : preds[w])
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) score[w] += delta[w];
    }
  }

  // Each unordered pair was counted from both ends.
  const double pairs =
      n > 2 ? static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0
            : 0.0;
  std::map<NodeId, double> out;
  for (std::size_t v = 0; v < n; ++v)
    out[graph.profile(v).id] = pairs > 0.0 ? score[v] / 2.0 / pairs : 0.0;
  return out;
}

std::vector<std::string> fidelity_warnings(const SosGraph& graph) {
  std::vector<std::string> out;
  for (const Edge& e : graph.edges()) {
    if (e.weight != kFixedLinkWeight && e.weight != kAuxiliaryLinkWeight) {
      out.push_back("edge '" + e.a + "' -- '" + e.b + "' has weight " +
                    std::to_string(e.weight) +
                    "; expected 1.0 (fixed link) or 0.5 (auxiliary)");
    }
  }
  return out;
}

std::size_t count_components(const SosGraph& graph,
                             std::optional<std::size_t> removed) {
  const std::size_t n = graph.size();
  std::vector<bool> seen(n, false);
  if (removed) seen[*removed] = true;
  std::size_t components = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : graph.neighbor_indices(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

std::size_t diameter(const SosGraph& graph) {
  const std::size_t n = graph.size();
  std::size_t best = 0;
  std::vector<long> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1L);
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      best = std::max(best, static_cast<std::size_t>(dist[v]));
      for (std::size_t w : graph.neighbor_indices(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return best;
}

}  // namespace cascade
