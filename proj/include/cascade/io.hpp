#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cascade/catalog.hpp"
#include "cascade/graph.hpp"
#include "cascade/propagation.hpp"

namespace cascade {

/// Whole-file read/write. Failures throw Error(kIo) naming the path.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     std::string_view contents);

/// Topology document:
///   {"nodes": [{"id", "kind", "label"}], "edges": [{"a", "b", "weight"}]}
/// "kind" is "core" | "auxiliary_power" | "docking" and may be omitted;
/// "label" defaults to the id. Unknown keys are rejected.
SosGraph parse_topology(std::string_view document);
std::string serialize_topology(const SosGraph& graph);

/// Scenario document; every key but "source" is optional:
///   {"source", "initial_impact", "strategy", "epsilon", "max_steps",
///    "affected_threshold"}
Scenario parse_scenario(std::string_view document);

/// Strategy document:
///   {"name", "rule", "protected_alpha", "unprotected_alpha",
///    "custom_overrides"}
/// "rule" is "uniform_baseline" | "habitation_only" | "custom";
/// "custom_overrides" (object id -> alpha) is optional.
StrategySpec parse_strategy(std::string_view document);
std::string serialize_strategy(const StrategySpec& strategy);

/// CSV with header `t,node_id,impact`, one row per node per step, rows
/// ordered by (t, node_id), impacts with nine decimals.
std::string trace_to_csv(const SosGraph& graph, const PropagationTrace& trace);

}  // namespace cascade
