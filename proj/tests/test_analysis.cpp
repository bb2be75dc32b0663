#include "doctest.h"

#include "cascade/analysis.hpp"
#include "cascade/error.hpp"
#include "cascade/io.hpp"
#include "json.hpp"

using namespace cascade;

namespace {

NodeProfile node(const std::string& id) {
  return {id, NodeKind::kCore, id};
}

SosGraph gateway() {
  return parse_topology(
      read_text_file(CASCADE_DATA_DIR "/gateway_topology.json"));
}

Scenario collision() {
  return parse_scenario(
      read_text_file(CASCADE_DATA_DIR "/collision_scenario.json"));
}

}  // namespace

TEST_CASE("compare_strategies: self-comparison is neutral") {
  SosGraph g = gateway();
  for (const auto& s : {uniform_baseline(0.3), habitation_only(0.3, 1.0)}) {
    auto report = compare_strategies(g, collision(), s, s);
    REQUIRE(report.affected_increase_pct.has_value());
    CHECK(*report.affected_increase_pct == 0.0);
    CHECK(report.impact_reduction_pct == 0.0);
  }
}

TEST_CASE("compare_strategies: isolation versus full spread") {
  SosGraph g = build_graph({node("A"), node("B"), node("C"), node("D")},
                           {{"A", "B", 1.0}, {"B", "C", 1.0}});
  StrategySpec closed{"closed", StrategyRule::kCustom, 0.0, 0.0, {}};
  StrategySpec open{"open", StrategyRule::kUniformBaseline, 1.0, 1.0, {}};
  auto report = compare_strategies(g, Scenario{"A", 1.0}, closed, open);
  CHECK(report.baseline.affected_count == 1);
  CHECK(report.alternative.affected_count == 3);
  CHECK(*report.affected_increase_pct == doctest::Approx(200.0));
  CHECK(report.impact_reduction_pct == doctest::Approx(100.0 * 2.0 / 3.0));
}

TEST_CASE("compare_strategies: shipped collision fixture") {
  // Frozen from an independent fixed-point iteration of the shipped files.
  auto report = compare_strategies(gateway(), collision(),
                                   uniform_baseline(0.3),
                                   habitation_only(0.3, 1.0));
  CHECK(report.baseline.affected ==
        std::set<NodeId>{"canadarm3", "halo"});
  CHECK(report.alternative.affected_count == 14);
  CHECK(*report.affected_increase_pct == doctest::Approx(600.0));
  CHECK(report.impact_reduction_pct ==
        doctest::Approx(94.49851113465157).epsilon(1e-9));
  CHECK(report.alternative.total_impact ==
        doctest::Approx(13.214285712823589).epsilon(1e-9));
  CHECK(report.baseline.trace.steps_taken == 72);
  CHECK(report.alternative.trace.steps_taken == 54);
}

TEST_CASE("compare_strategies: baseline below threshold everywhere") {
  SosGraph tri = build_graph({node("A"), node("B"), node("C")},
                             {{"A", "B", 1.0}, {"A", "C", 1.0}, {"B", "C", 1.0}});
  StrategySpec closed{"closed", StrategyRule::kCustom, 0.0, 0.0, {}};
  StrategySpec open{"open", StrategyRule::kUniformBaseline, 1.0, 1.0, {}};
  Scenario s{"A", 0.6};
  s.affected_threshold = 0.7;

  auto neither = compare_strategies(tri, s, closed, closed);
  CHECK(*neither.affected_increase_pct == 0.0);

  auto r = compare_strategies(tri, s, closed, open);
  CHECK(r.baseline.affected_count == 0);
  CHECK(r.alternative.affected_count == 3);
  CHECK_FALSE(r.affected_increase_pct.has_value());
  auto parsed = nlohmann::json::parse(comparison_to_json(r));
  CHECK(parsed["affected_increase_pct"].is_null());
}

TEST_CASE("vulnerability_ranking") {
  SosGraph star = build_graph(
      {node("L1"), node("C"), node("L2"), node("L3")},
      {{"C", "L1", 1.0}, {"C", "L2", 1.0}, {"C", "L3", 0.5}});
  auto ranking = vulnerability_ranking(star);
  CHECK(ranking.front().id == "C");
  CHECK(ranking.front().is_articulation);
  // Leaves tie on articulation and betweenness; weighted degree then id.
  CHECK(ranking[1].id == "L1");
  CHECK(ranking[2].id == "L2");
  CHECK(ranking[3].id == "L3");

  SosGraph single = build_graph({node("solo")}, {});
  auto one = vulnerability_ranking(single);
  REQUIRE(one.size() == 1);
  CHECK(one[0].id == "solo");
  CHECK(one[0].weighted_degree == 0.0);
  CHECK(one[0].betweenness == 0.0);
  CHECK_FALSE(one[0].is_articulation);

  SosGraph g = gateway();
  auto first = vulnerability_ranking(g);
  CHECK(first.front().id == "halo");
  for (int i = 0; i < 5; ++i) {
    auto again = vulnerability_ranking(g);
    REQUIRE(again.size() == first.size());
    for (std::size_t k = 0; k < again.size(); ++k)
      CHECK(again[k].id == first[k].id);
  }
}

TEST_CASE("containment_feasibility") {
  SosGraph g = gateway();
  auto halo = containment_feasibility(g, "halo", {{"halo", "ppe", 1.0}});
  CHECK_FALSE(halo.feasible);
  REQUIRE(halo.mandatory.size() == 1);
  CHECK(halo.mandatory[0].b == "ppe");
  CHECK(halo.removable.size() == neighbors(g, "halo").size() - 1);

  // must_keep matches regardless of endpoint order or weight.
  auto reversed = containment_feasibility(g, "halo", {{"ppe", "halo", 0.5}});
  CHECK_FALSE(reversed.feasible);

  SosGraph path = build_graph({node("A"), node("B"), node("D")},
                              {{"A", "B", 1.0}});
  auto leaf = containment_feasibility(path, "A", {});
  CHECK(leaf.feasible);
  CHECK(leaf.removable.size() == 1);
  auto isolated = containment_feasibility(path, "D", {});
  CHECK(isolated.feasible);
  CHECK(isolated.removable.empty());
  CHECK_THROWS_AS(containment_feasibility(path, "Q", {}), Error);
}

TEST_CASE("containment: cutting removable edges isolates the node") {
  SosGraph g = gateway();
  for (const auto& p : g.profiles()) {
    auto report = containment_feasibility(g, p.id, {});
    REQUIRE(report.feasible);
    SosGraph cut = without_edges(g, report.removable);
    CHECK(neighbors(cut, p.id).empty());
    const bool articulation = articulation_points(g).contains(p.id);
    // Isolating an articulation point splits its neighbors apart as well.
    if (articulation) CHECK(count_components(cut) > 2);
  }
}

TEST_CASE("vulnerability JSON lists articulation points and ranks") {
  SosGraph g = gateway();
  auto parsed =
      nlohmann::json::parse(vulnerability_to_json(g, vulnerability_ranking(g)));
  CHECK(parsed["ranking"][0]["id"] == "halo");
  CHECK(parsed["ranking"][0]["rank"] == 1);
  auto cuts = parsed["articulation_points"].get<std::vector<std::string>>();
  CHECK(std::find(cuts.begin(), cuts.end(), "halo") != cuts.end());
  CHECK(parsed["node_count"] == 14);
}
