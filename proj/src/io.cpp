#include "cascade/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include "cascade/error.hpp"
#include "json_util.hpp"

namespace cascade {

using nlohmann::json;

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad())
    throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path,
                     std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error(ErrorCode::kIo, "cannot create '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out)
    throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
}

SosGraph parse_topology(std::string_view document) {
  const json root = detail::parse_json(document, "topology");
  detail::expect_keys(root, "topology", {"nodes", "edges"}, {});

  std::vector<NodeProfile> profiles;
  for (const json& item : detail::array_at(root, "nodes")) {
    detail::expect_keys(item, "node", {"id"}, {"kind", "label"});
    NodeProfile profile;
    profile.id = detail::string_at(item, "id");
    if (item.contains("kind")) {
      const std::string kind = detail::string_at(item, "kind");
      profile.kind = parse_node_kind(kind);
      if (!profile.kind)
        throw Error(ErrorCode::kSchemaError, "node '" + profile.id +
                                                 "' has unknown kind '" +
                                                 kind + "'");
    }
    profile.label =
        item.contains("label") ? detail::string_at(item, "label") : profile.id;
    profiles.push_back(std::move(profile));
  }

  std::vector<Edge> edges;
  for (const json& item : detail::array_at(root, "edges")) {
    detail::expect_keys(item, "edge", {"a", "b", "weight"}, {});
    edges.push_back({detail::string_at(item, "a"),
                     detail::string_at(item, "b"),
                     detail::number_at(item, "weight")});
  }
  return build_graph(std::move(profiles), std::move(edges));
}

std::string serialize_topology(const SosGraph& graph) {
  json nodes = json::array();
  for (const NodeProfile& p : graph.profiles()) {
    json node = {{"id", p.id}, {"label", p.label}};
    if (p.kind) node["kind"] = std::string(to_string(*p.kind));
    nodes.push_back(std::move(node));
  }
  json edges = json::array();
  for (const Edge& e : graph.edges())
    edges.push_back({{"a", e.a}, {"b", e.b}, {"weight", e.weight}});
  return detail::dump_canonical({{"nodes", nodes}, {"edges", edges}});
}

Scenario parse_scenario(std::string_view document) {
  const json root = detail::parse_json(document, "scenario");
  detail::expect_keys(root, "scenario", {"source"},
                      {"initial_impact", "strategy", "epsilon", "max_steps",
                       "affected_threshold"});
  Scenario scenario;
  scenario.source = detail::string_at(root, "source");
  if (root.contains("initial_impact"))
    scenario.initial_impact = detail::number_at(root, "initial_impact");
  if (root.contains("strategy"))
    scenario.strategy = detail::string_at(root, "strategy");
  if (root.contains("epsilon"))
    scenario.epsilon = detail::number_at(root, "epsilon");
  if (root.contains("max_steps")) {
    const json& steps = root.at("max_steps");
    if (!steps.is_number_integer() || steps.get<long long>() <= 0)
      throw Error(ErrorCode::kInvalidScenario,
                  "max_steps must be a positive integer");
    scenario.max_steps = steps.get<std::size_t>();
  }
  if (root.contains("affected_threshold"))
    scenario.affected_threshold = detail::number_at(root, "affected_threshold");
  scenario.validate();
  return scenario;
}

StrategySpec parse_strategy(std::string_view document) {
  const json root = detail::parse_json(document, "strategy");
  detail::expect_keys(root, "strategy",
                      {"name", "rule", "protected_alpha", "unprotected_alpha"},
                      {"custom_overrides"});
  StrategySpec strategy;
  strategy.name = detail::string_at(root, "name");
  const std::string rule = detail::string_at(root, "rule");
  auto parsed = parse_strategy_rule(rule);
  if (!parsed)
    throw Error(ErrorCode::kInvalidStrategy, "unknown rule '" + rule + "'");
  strategy.rule = *parsed;
  strategy.protected_alpha = detail::number_at(root, "protected_alpha");
  strategy.unprotected_alpha = detail::number_at(root, "unprotected_alpha");
  if (root.contains("custom_overrides")) {
    const json& overrides = root.at("custom_overrides");
    if (!overrides.is_object())
      throw Error(ErrorCode::kSchemaError,
                  "'custom_overrides' must be an object");
    for (const auto& [id, value] : overrides.items()) {
      if (!value.is_number())
        throw Error(ErrorCode::kSchemaError,
                    "override for '" + id + "' must be a number");
      strategy.custom_overrides[id] = value.get<double>();
    }
  }
  strategy.validate();
  return strategy;
}

std::string serialize_strategy(const StrategySpec& strategy) {
  json overrides = json::object();
  for (const auto& [id, alpha] : strategy.custom_overrides)
    overrides[id] = alpha;
  return detail::dump_canonical(
      {{"name", strategy.name},
       {"rule", std::string(to_string(strategy.rule))},
       {"protected_alpha", strategy.protected_alpha},
       {"unprotected_alpha", strategy.unprotected_alpha},
       {"custom_overrides", overrides}});
}

std::string trace_to_csv(const SosGraph& graph,
                         const PropagationTrace& trace) {
  std::vector<std::size_t> order(graph.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return graph.profile(x).id < graph.profile(y).id;
  });

  std::string out = "t,node_id,impact\n";
  char value[64];
  for (const ImpactState& state : trace.states) {
    const std::string t = std::to_string(state.t);
    for (std::size_t i : order) {
      std::snprintf(value, sizeof value, "%.9f", state.impact[i]);
      out += t;
      out += ',';
      out += graph.profile(i).id;
      out += ',';
      out += value;
      out += '\n';
    }
  }
  return out;
}

}  // namespace cascade
