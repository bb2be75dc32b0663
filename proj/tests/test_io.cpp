#include <random>

#include "doctest.h"

#include "cascade/error.hpp"
#include "cascade/io.hpp"
#include "oracles.hpp"

using namespace cascade;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kIo;
}

}  // namespace

TEST_CASE("topology parsing") {
  SosGraph g = parse_topology(R"({
    "nodes": [{"id": "a", "kind": "core", "label": "A"}, {"id": "b"}],
    "edges": [{"a": "a", "b": "b", "weight": 0.5}]})");
  CHECK(g.profile(0).kind == NodeKind::kCore);
  CHECK_FALSE(g.profile(1).kind.has_value());
  CHECK(g.profile(1).label == "b");
  CHECK(neighbors(g, "a")[0].weight == 0.5);

  CHECK(code_of([] {
          parse_topology(R"({"nodes": [{"id": "a"}], "edges": [], "x": 1})");
        }) == ErrorCode::kSchemaError);
  CHECK(code_of([] {
          parse_topology(
              R"({"nodes": [{"id": "a", "colour": "red"}], "edges": []})");
        }) == ErrorCode::kSchemaError);
  CHECK(code_of([] {
          parse_topology(
              R"({"nodes": [{"id": "a", "kind": "habitat"}], "edges": []})");
        }) == ErrorCode::kSchemaError);
  CHECK(code_of([] { parse_topology(R"({"nodes": [], "edges": []})"); }) ==
        ErrorCode::kEmptyGraph);
  CHECK(code_of([] {
          parse_topology(
              R"({"nodes": [{"id": "a"}], "edges": [{"a": "a", "b": "a", "weight": 1}]})");
        }) == ErrorCode::kSelfLoop);
  CHECK(code_of([] {
          parse_topology(
              R"({"nodes": [{"id": "a"}, {"id": "b"}], "edges": [{"a": "a", "b": "b", "weight": "1"}]})");
        }) == ErrorCode::kSchemaError);
}

TEST_CASE("property: topology serialization round-trips") {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 50; ++round) {
    SosGraph g = oracle::to_sos(oracle::random_graph(rng, 1 + rng() % 10, 0.4, false));
    const std::string text = serialize_topology(g);
    CHECK(serialize_topology(parse_topology(text)) == text);
  }
}

TEST_CASE("scenario parsing fills defaults") {
  Scenario s = parse_scenario(R"({"source": "canadarm3"})");
  CHECK(s.initial_impact == 1.0);
  CHECK(s.epsilon == kDefaultEpsilon);
  CHECK(s.max_steps == kDefaultMaxSteps);
  CHECK(s.affected_threshold == kDefaultAffectedThreshold);
  CHECK_FALSE(s.strategy.has_value());

  Scenario shipped =
      parse_scenario(read_text_file(CASCADE_DATA_DIR "/collision_scenario.json"));
  CHECK(shipped.source == "canadarm3");
  CHECK(shipped.initial_impact == 0.33);
  CHECK(shipped.affected_threshold == 0.05);

  CHECK(code_of([] { parse_scenario(R"({"initial_impact": 0.3})"); }) ==
        ErrorCode::kSchemaError);
  CHECK(code_of([] {
          parse_scenario(R"({"source": "a", "initial_impact": 1.5})");
        }) == ErrorCode::kInvalidScenario);
  CHECK(code_of([] {
          parse_scenario(R"({"source": "a", "max_steps": 0})");
        }) == ErrorCode::kInvalidScenario);
  CHECK(code_of([] {
          parse_scenario(R"({"source": "a", "epsilon": -1})");
        }) == ErrorCode::kInvalidScenario);
}

TEST_CASE("strategy parsing") {
  StrategySpec s = parse_strategy(
      read_text_file(CASCADE_DATA_DIR "/strategies/habitation_only.json"));
  CHECK(s.rule == StrategyRule::kHabitationOnly);
  CHECK(s.protected_alpha == 0.3);
  CHECK(s.unprotected_alpha == 1.0);

  StrategySpec c = parse_strategy(R"({"name": "c", "rule": "custom",
    "protected_alpha": 0.1, "unprotected_alpha": 0.9,
    "custom_overrides": {"canadarm3": 0}})");
  CHECK(c.custom_overrides.at("canadarm3") == 0.0);
  CHECK(parse_strategy(serialize_strategy(c)).custom_overrides ==
        c.custom_overrides);

  CHECK(code_of([] {
          parse_strategy(R"({"name": "x", "rule": "random",
            "protected_alpha": 0.1, "unprotected_alpha": 0.9})");
        }) == ErrorCode::kInvalidStrategy);
  CHECK(code_of([] {
          parse_strategy(R"({"name": "x", "rule": "custom",
            "protected_alpha": 0.9, "unprotected_alpha": 0.1})");
        }) == ErrorCode::kInvalidStrategy);
}

TEST_CASE("trace CSV layout") {
  SosGraph g = build_graph({{"b", NodeKind::kCore, "b"}, {"a", NodeKind::kCore, "a"}},
                           {{"a", "b", 0.5}});
  auto trace = run_scenario(Scenario{"a", 0.33}, g,
                            AlphaAssignment::uniform(g, 1.0));
  const std::string csv = trace_to_csv(g, trace);
  CHECK(csv.rfind("t,node_id,impact\n"
                  "0,a,0.330000000\n"
                  "0,b,0.000000000\n"
                  "1,a,0.330000000\n"
                  "1,b,0.165000000\n",
                  0) == 0);
  std::size_t rows = 0;
  for (char ch : csv) rows += ch == '\n';
  CHECK(rows == 1 + trace.states.size() * g.size());
}

TEST_CASE("file helpers report I/O failures") {
  CHECK(code_of([] { read_text_file("/nonexistent/dir/file.json"); }) ==
        ErrorCode::kIo);
  CHECK(code_of([] { write_text_file("/nonexistent/dir/file.json", "x"); }) ==
        ErrorCode::kIo);
}
