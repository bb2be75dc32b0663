#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cascade/graph.hpp"
#include "cascade/propagation.hpp"

namespace cascade {

/// Systems whose critical controls are marked in the catalog.
enum class SystemTag { kOmcv, kPpe };

std::string_view to_string(SystemTag tag) noexcept;
/// Accepts "OMCV" and "PPE", case-insensitively.
std::optional<SystemTag> parse_system_tag(std::string_view text) noexcept;

/// Where a control applies: a single component, the shared integration of
/// several systems, or crewed modules.
enum class ControlScope { kComponent, kIntegration, kCrewed };

std::string_view to_string(ControlScope scope) noexcept;
std::optional<ControlScope> parse_control_scope(std::string_view text) noexcept;

bool is_valid_threat_id(std::string_view id);   // (EX|EXF|EEX)-dddd
bool is_valid_control_id(std::string_view id);  // CMdddd

struct ThreatTechnique {
  std::string id;
  std::string name;
};

struct Countermeasure {
  std::string id;
  std::string name;
  std::set<SystemTag> critical_for;
  ControlScope scope = ControlScope::kComponent;
  /// Default purpose clause used when rendering a requirement.
  std::optional<std::string> rationale;

  bool is_critical() const noexcept { return !critical_for.empty(); }
};

struct AttackSurface {
  std::string input;
  std::string output;
  std::string dependency;
};

struct ComponentEntry {
  std::string component;
  std::vector<std::string> ecc_associations;
  AttackSurface attack_surface;
  std::vector<std::string> threats;
  std::vector<std::string> controls;
};

/// Components, attack surfaces, threat techniques and countermeasures.
class SecurityCatalog {
 public:
  SecurityCatalog(std::vector<Countermeasure> countermeasures,
                  std::vector<ThreatTechnique> threats,
                  std::vector<ComponentEntry> components);

  const std::vector<Countermeasure>& countermeasures() const noexcept {
    return countermeasures_;
  }
  const std::vector<ThreatTechnique>& threats() const noexcept {
    return threats_;
  }
  const std::vector<ComponentEntry>& components() const noexcept {
    return components_;
  }

  /// Case-insensitive name lookup. Throws Error(kUnknownComponent).
  const ComponentEntry& component(std::string_view name) const;
  /// Throws Error(kUnknownControl).
  const Countermeasure& countermeasure(std::string_view id) const;
  const ThreatTechnique* threat(std::string_view id) const noexcept;

 private:
  std::vector<Countermeasure> countermeasures_;
  std::vector<ThreatTechnique> threats_;
  std::vector<ComponentEntry> components_;
};

/// Parses a catalog document. Throws Error(kSchemaError) on structural
/// problems, Error(kInvalidControlId) / Error(kInvalidThreatId) on ids that
/// break the id patterns, and Error(kUnknownControl) when a component names
/// an undefined control.
SecurityCatalog load_catalog(std::string_view document);

/// Canonical text form: keys sorted, arrays in stored order, two-space
/// indentation, trailing newline.
std::string serialize_catalog(const SecurityCatalog& catalog);

/// Controls of a component, optionally only those critical for `system`.
std::vector<Countermeasure> controls_for(const SecurityCatalog& catalog,
                                         std::string_view component,
                                         std::optional<SystemTag> system = {});

struct RequirementStatement {
  std::string subject;
  std::string control_id;
  std::string control_name;
  std::string text;
};

/// "<subject> SHALL implement <name> (<id>) to <rationale>."
/// Throws Error(kInvalidControlId) on a malformed control id.
RequirementStatement generate_requirement(std::string_view subject,
                                          const Countermeasure& control,
                                          std::string_view rationale_clause);

enum class StrategyRule { kUniformBaseline, kHabitationOnly, kCustom };

std::string_view to_string(StrategyRule rule) noexcept;
std::optional<StrategyRule> parse_strategy_rule(std::string_view text) noexcept;

/// A named way of placing countermeasures on nodes, expressed as the
/// diffusion factor protected and unprotected nodes receive.
struct StrategySpec {
  std::string name;
  StrategyRule rule = StrategyRule::kUniformBaseline;
  double protected_alpha = 0.3;
  double unprotected_alpha = 1.0;
  std::map<NodeId, double> custom_overrides;

  /// Throws Error(kInvalidStrategy).
  void validate() const;
};

/// Reproduction defaults: all nodes protected at 0.3.
StrategySpec uniform_baseline(double protected_alpha = 0.3);
/// Core modules at `protected_alpha`, everything else at `unprotected_alpha`.
StrategySpec habitation_only(double protected_alpha = 0.3,
                             double unprotected_alpha = 1.0);

/// Throws Error(kMissingKindMetadata) for kHabitationOnly on a graph whose
/// nodes lack kinds, Error(kUnknownNode) for overrides naming absent nodes.
AlphaAssignment apply_strategy(const StrategySpec& strategy,
                               const SosGraph& graph);

}  // namespace cascade
