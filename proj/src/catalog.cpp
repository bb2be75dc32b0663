#include "cascade/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "json.hpp"

#include "cascade/error.hpp"
#include "json_util.hpp"

namespace cascade {

using nlohmann::json;

std::string_view to_string(SystemTag tag) noexcept {
  return tag == SystemTag::kOmcv ? "OMCV" : "PPE";
}

std::optional<SystemTag> parse_system_tag(std::string_view text) noexcept {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (upper == "OMCV") return SystemTag::kOmcv;
  if (upper == "PPE") return SystemTag::kPpe;
  return std::nullopt;
}

std::string_view to_string(ControlScope scope) noexcept {
  switch (scope) {
    case ControlScope::kComponent: return "component";
    case ControlScope::kIntegration: return "integration";
    case ControlScope::kCrewed: return "crewed";
  }
  return "component";
}

std::optional<ControlScope> parse_control_scope(
    std::string_view text) noexcept {
  if (text == "component") return ControlScope::kComponent;
  if (text == "integration") return ControlScope::kIntegration;
  if (text == "crewed") return ControlScope::kCrewed;
  return std::nullopt;
}

bool is_valid_threat_id(std::string_view id) {
  static const std::regex pattern("(EX|EXF|EEX)-[0-9]{4}");
  return std::regex_match(id.begin(), id.end(), pattern);
}

bool is_valid_control_id(std::string_view id) {
  static const std::regex pattern("CM[0-9]{4}");
  return std::regex_match(id.begin(), id.end(), pattern);
}

namespace {

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

SecurityCatalog::SecurityCatalog(std::vector<Countermeasure> countermeasures,
                                 std::vector<ThreatTechnique> threats,
                                 std::vector<ComponentEntry> components)
    : countermeasures_(std::move(countermeasures)),
      threats_(std::move(threats)),
      components_(std::move(components)) {
  for (const auto& cm : countermeasures_) {
    if (!is_valid_control_id(cm.id))
      throw Error(ErrorCode::kInvalidControlId, "'" + cm.id + "'");
  }
  for (const auto& t : threats_) {
    if (!is_valid_threat_id(t.id))
      throw Error(ErrorCode::kInvalidThreatId, "'" + t.id + "'");
  }
  for (const auto& entry : components_) {
    for (const auto& id : entry.threats) {
      if (!is_valid_threat_id(id))
        throw Error(ErrorCode::kInvalidThreatId,
                    "'" + id + "' in component '" + entry.component + "'");
      if (threat(id) == nullptr)
        throw Error(ErrorCode::kSchemaError,
                    "component '" + entry.component +
                        "' references undefined threat '" + id + "'");
    }
    for (const auto& id : entry.controls) {
      if (!is_valid_control_id(id))
        throw Error(ErrorCode::kInvalidControlId,
                    "'" + id + "' in component '" + entry.component + "'");
      countermeasure(id);
    }
  }
}

const ComponentEntry& SecurityCatalog::component(std::string_view name) const {
  for (const auto& entry : components_) {
    if (iequals(entry.component, name)) return entry;
  }
  throw Error(ErrorCode::kUnknownComponent, "'" + std::string(name) + "'");
}

const Countermeasure& SecurityCatalog::countermeasure(
    std::string_view id) const {
  for (const auto& cm : countermeasures_) {
    if (cm.id == id) return cm;
  }
  throw Error(ErrorCode::kUnknownControl, "'" + std::string(id) + "'");
}

const ThreatTechnique* SecurityCatalog::threat(
    std::string_view id) const noexcept {
  for (const auto& t : threats_) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

SecurityCatalog load_catalog(std::string_view document) {
  const json root = detail::parse_json(document, "catalog");
  detail::expect_keys(root, "catalog", {"countermeasures", "threats",
                                        "components"}, {});

  std::vector<Countermeasure> countermeasures;
  for (const json& item : detail::array_at(root, "countermeasures")) {
    detail::expect_keys(item, "countermeasure",
                        {"id", "name", "critical_for", "scope"},
                        {"rationale"});
    Countermeasure cm;
    cm.id = detail::string_at(item, "id");
    cm.name = detail::string_at(item, "name");
    for (const json& tag : detail::array_at(item, "critical_for")) {
      if (!tag.is_string())
        throw Error(ErrorCode::kSchemaError,
                    cm.id + ": critical_for entries must be strings");
      auto parsed = parse_system_tag(tag.get<std::string>());
      if (!parsed)
        throw Error(ErrorCode::kSchemaError,
                    cm.id + ": unknown system tag '" + tag.get<std::string>() +
                        "'");
      cm.critical_for.insert(*parsed);
    }
    const std::string scope = detail::string_at(item, "scope");
    auto parsed_scope = parse_control_scope(scope);
    if (!parsed_scope)
      throw Error(ErrorCode::kSchemaError,
                  cm.id + ": unknown scope '" + scope + "'");
    cm.scope = *parsed_scope;
    if (item.contains("rationale"))
      cm.rationale = detail::string_at(item, "rationale");
    countermeasures.push_back(std::move(cm));
  }

  std::vector<ThreatTechnique> threats;
  for (const json& item : detail::array_at(root, "threats")) {
    detail::expect_keys(item, "threat", {"id", "name"}, {});
    threats.push_back(
        {detail::string_at(item, "id"), detail::string_at(item, "name")});
  }

  std::vector<ComponentEntry> components;
  for (const json& item : detail::array_at(root, "components")) {
    detail::expect_keys(item, "component",
                        {"component", "ecc_associations", "attack_surface",
                         "threats", "controls"},
                        {});
    ComponentEntry entry;
    entry.component = detail::string_at(item, "component");
    entry.ecc_associations = detail::strings_at(item, "ecc_associations");
    const json& surface = item.at("attack_surface");
    detail::expect_keys(surface, "attack_surface",
                        {"input", "output", "dependency"}, {});
    entry.attack_surface = {detail::string_at(surface, "input"),
                            detail::string_at(surface, "output"),
                            detail::string_at(surface, "dependency")};
    entry.threats = detail::strings_at(item, "threats");
    entry.controls = detail::strings_at(item, "controls");
    components.push_back(std::move(entry));
  }

  return SecurityCatalog(std::move(countermeasures), std::move(threats),
                         std::move(components));
}

std::string serialize_catalog(const SecurityCatalog& catalog) {
  json root = json::object();
  json countermeasures = json::array();
  for (const auto& cm : catalog.countermeasures()) {
    json tags = json::array();
    for (SystemTag tag : cm.critical_for) tags.push_back(to_string(tag));
    json item = {{"id", cm.id},
                 {"name", cm.name},
                 {"critical_for", tags},
                 {"scope", to_string(cm.scope)}};
    if (cm.rationale) item["rationale"] = *cm.rationale;
    countermeasures.push_back(std::move(item));
  }
  json threats = json::array();
  for (const auto& t : catalog.threats())
    threats.push_back({{"id", t.id}, {"name", t.name}});
  json components = json::array();
  for (const auto& entry : catalog.components()) {
    components.push_back(
        {{"component", entry.component},
         {"ecc_associations", entry.ecc_associations},
         {"attack_surface",
          {{"input", entry.attack_surface.input},
           {"output", entry.attack_surface.output},
           {"dependency", entry.attack_surface.dependency}}},
         {"threats", entry.threats},
         {"controls", entry.controls}});
  }
  root["countermeasures"] = std::move(countermeasures);
  root["threats"] = std::move(threats);
  root["components"] = std::move(components);
  return detail::dump_canonical(root);
}

std::vector<Countermeasure> controls_for(const SecurityCatalog& catalog,
                                         std::string_view component,
                                         std::optional<SystemTag> system) {
  const ComponentEntry& entry = catalog.component(component);
  std::vector<Countermeasure> out;
  for (const auto& id : entry.controls) {
    const Countermeasure& cm = catalog.countermeasure(id);
    if (!system || cm.critical_for.contains(*system)) out.push_back(cm);
  }
  return out;
}

RequirementStatement generate_requirement(std::string_view subject,
                                          const Countermeasure& control,
                                          std::string_view rationale_clause) {
  if (!is_valid_control_id(control.id))
    throw Error(ErrorCode::kInvalidControlId, "'" + control.id + "'");
  RequirementStatement statement;
  statement.subject = std::string(subject);
  statement.control_id = control.id;
  statement.control_name = control.name;
  statement.text = statement.subject + " SHALL implement " + control.name +
                   " (" + control.id + ") to " + std::string(rationale_clause) +
                   ".";
  return statement;
}

std::string_view to_string(StrategyRule rule) noexcept {
  switch (rule) {
    case StrategyRule::kUniformBaseline: return "uniform_baseline";
    case StrategyRule::kHabitationOnly: return "habitation_only";
    case StrategyRule::kCustom: return "custom";
  }
  return "custom";
}

std::optional<StrategyRule> parse_strategy_rule(
    std::string_view text) noexcept {
  if (text == "uniform_baseline") return StrategyRule::kUniformBaseline;
  if (text == "habitation_only") return StrategyRule::kHabitationOnly;
  if (text == "custom") return StrategyRule::kCustom;
  return std::nullopt;
}

void StrategySpec::validate() const {
  auto unit = [&](const std::string& field, double value) {
    if (!(value >= 0.0 && value <= 1.0))
      throw Error(ErrorCode::kInvalidStrategy,
                  "'" + name + "': " + field + " = " + std::to_string(value) +
                      " outside [0, 1]");
  };
  unit("protected_alpha", protected_alpha);
  unit("unprotected_alpha", unprotected_alpha);
  if (protected_alpha > unprotected_alpha)
    throw Error(ErrorCode::kInvalidStrategy,
                "'" + name + "': protected_alpha exceeds unprotected_alpha");
  for (const auto& [id, alpha] : custom_overrides)
    unit("custom_overrides['" + id + "']", alpha);
}

StrategySpec uniform_baseline(double protected_alpha) {
  return {"uniform_baseline", StrategyRule::kUniformBaseline, protected_alpha,
          1.0, {}};
}

StrategySpec habitation_only(double protected_alpha,
                             double unprotected_alpha) {
  return {"habitation_only", StrategyRule::kHabitationOnly, protected_alpha,
          unprotected_alpha, {}};
}

AlphaAssignment apply_strategy(const StrategySpec& strategy,
                               const SosGraph& graph) {
  strategy.validate();
  std::vector<double> alpha(graph.size(), strategy.unprotected_alpha);
  switch (strategy.rule) {
    case StrategyRule::kUniformBaseline:
      std::fill(alpha.begin(), alpha.end(), strategy.protected_alpha);
      break;
    case StrategyRule::kHabitationOnly:
      for (std::size_t i = 0; i < graph.size(); ++i) {
        const NodeProfile& p = graph.profile(i);
        if (!p.kind)
          throw Error(ErrorCode::kMissingKindMetadata,
                      "node '" + p.id + "' has no kind");
        if (*p.kind == NodeKind::kCore) alpha[i] = strategy.protected_alpha;
      }
      break;
    case StrategyRule::kCustom:
      break;
  }
  // Overrides win over the rule for every rule.
  for (const auto& [id, value] : strategy.custom_overrides)
    alpha[graph.index_of(id)] = value;
  return AlphaAssignment::from_dense(graph, std::move(alpha));
}

}  // namespace cascade
