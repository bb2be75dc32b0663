#pragma once

// Reference computations used only by tests. They work on plain edge lists
// and string-keyed maps and share no code with the library.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "cascade/graph.hpp"

namespace oracle {

struct PlainGraph {
  std::vector<std::string> nodes;
  std::vector<std::tuple<std::string, std::string, double>> edges;
};

inline cascade::SosGraph to_sos(const PlainGraph& g) {
  std::vector<cascade::NodeProfile> profiles;
  for (const auto& id : g.nodes)
    profiles.push_back({id, cascade::NodeKind::kAuxiliaryPower, id});
  std::vector<cascade::Edge> edges;
  for (const auto& [a, b, w] : g.edges) edges.push_back({a, b, w});
  return cascade::build_graph(profiles, edges);
}

/// Random simple graph on `n` nodes named n0..n{n-1}.
inline PlainGraph random_graph(std::mt19937_64& rng, std::size_t n,
                               double edge_probability, bool unit_weights) {
  PlainGraph g;
  for (std::size_t i = 0; i < n; ++i) g.nodes.push_back("n" + std::to_string(i));
  std::bernoulli_distribution coin(edge_probability);
  // (0, 1]: 1 - U[0,1) never hits 0.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng))
        g.edges.emplace_back(g.nodes[i], g.nodes[j],
                             unit_weights ? 1.0 : 1.0 - unit(rng));
    }
  }
  std::shuffle(g.edges.begin(), g.edges.end(), rng);
  return g;
}

using Impacts = std::map<std::string, double>;

/// Straightforward attenuated update written from the model definition:
/// each node sums weight * impact over its incident edges, scales by its
/// alpha, keeps the larger of that and its current value, caps at one.
inline Impacts naive_step(const PlainGraph& g, const Impacts& current,
                          const std::map<std::string, double>& alpha) {
  Impacts next;
  for (const auto& v : g.nodes) {
    // Sum in ascending neighbor-id order.
    std::map<std::string, double> contributions;
    for (const auto& [a, b, w] : g.edges) {
      if (a == v) contributions[b] = w * current.at(b);
      if (b == v) contributions[a] = w * current.at(a);
    }
    double sum = 0.0;
    for (const auto& [u, c] : contributions) sum += c;
    double candidate = alpha.at(v) * sum;
    double value = current.at(v) > candidate ? current.at(v) : candidate;
    next[v] = value > 1.0 ? 1.0 : value;
  }
  return next;
}

struct NaiveTrace {
  std::vector<Impacts> states;
  bool converged = false;
};

inline NaiveTrace naive_run(const PlainGraph& g, const std::string& source,
                            double initial,
                            const std::map<std::string, double>& alpha,
                            double epsilon, std::size_t max_steps) {
  NaiveTrace trace;
  Impacts start;
  for (const auto& v : g.nodes) start[v] = v == source ? initial : 0.0;
  trace.states.push_back(start);
  for (std::size_t step = 0; step < max_steps; ++step) {
    Impacts next = naive_step(g, trace.states.back(), alpha);
    double change = 0.0;
    for (const auto& v : g.nodes) {
      double d = next[v] - trace.states.back().at(v);
      if (d < 0) d = -d;
      if (d > change) change = d;
    }
    trace.states.push_back(next);
    if (change < epsilon) {
      trace.converged = true;
      break;
    }
  }
  return trace;
}

/// Component count of the graph with `removed` deleted, by repeated
/// relaxation over the edge list.
inline std::size_t components_without(const PlainGraph& g,
                                      const std::string& removed) {
  std::map<std::string, std::string> label;
  for (const auto& v : g.nodes)
    if (v != removed) label[v] = v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [a, b, w] : g.edges) {
      if (a == removed || b == removed) continue;
      const std::string low = std::min(label[a], label[b]);
      if (label[a] != low || label[b] != low) {
        label[a] = label[b] = low;
        changed = true;
      }
    }
  }
  std::set<std::string> distinct;
  for (const auto& [v, l] : label) distinct.insert(l);
  return distinct.size();
}

/// Delete each node in turn and recount components.
inline std::set<std::string> brute_force_articulation(const PlainGraph& g) {
  const std::size_t base = components_without(g, std::string());
  std::set<std::string> out;
  for (const auto& v : g.nodes) {
    // Removing v also removes its own component when v was isolated.
    bool isolated = true;
    for (const auto& [a, b, w] : g.edges) isolated = isolated && a != v && b != v;
    const std::size_t after = components_without(g, v);
    if (!isolated && after > base) out.insert(v);
  }
  return out;
}

/// Enumerates every simple path between every pair, keeps the shortest
/// ones and counts how many pass through each interior vertex.
inline std::map<std::string, double> brute_force_betweenness(
    const PlainGraph& g) {
  const std::size_t n = g.nodes.size();
  std::map<std::string, std::set<std::string>> adj;
  for (const auto& v : g.nodes) adj[v];
  for (const auto& [a, b, w] : g.edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }

  std::map<std::string, double> score;
  for (const auto& v : g.nodes) score[v] = 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::string& s = g.nodes[i];
      const std::string& t = g.nodes[j];
      std::vector<std::vector<std::string>> paths;
      std::vector<std::string> path{s};
      std::set<std::string> on_path{s};
      // Depth-first enumeration of simple paths.
      auto dfs = [&](auto&& self, const std::string& at) -> void {
        if (at == t) {
          paths.push_back(path);
          return;
        }
        for (const auto& next : adj[at]) {
          if (on_path.count(next)) continue;
          path.push_back(next);
          on_path.insert(next);
          self(self, next);
          on_path.erase(next);
          path.pop_back();
        }
      };
      dfs(dfs, s);
      if (paths.empty()) continue;
      std::size_t shortest = std::numeric_limits<std::size_t>::max();
      for (const auto& p : paths) shortest = std::min(shortest, p.size());
      std::map<std::string, long> through;
      long total = 0;
      for (const auto& p : paths) {
        if (p.size() != shortest) continue;
        ++total;
        for (std::size_t k = 1; k + 1 < p.size(); ++k) ++through[p[k]];
      }
      for (const auto& [v, count] : through)
        score[v] += static_cast<double>(count) / static_cast<double>(total);
    }
  }
  const double pairs = n > 2 ? (n - 1.0) * (n - 2.0) / 2.0 : 0.0;
  for (auto& [v, x] : score) x = pairs > 0 ? x / pairs : 0.0;
  return score;
}

}  // namespace oracle
