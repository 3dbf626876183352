#pragma once

// Scenario and report files (JSON, schema in docs/formats.md) and the text
// encodings of objects and morphisms.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wfs/mod.hpp"
#include "wfs/mset.hpp"
#include "wfs/suites.hpp"

namespace wfs {

using Json = nlohmann::ordered_json;

struct CategorySpec {
  std::string kind = "zmod";  // zmod | mset | finset
  int modulus = 6;
  MonoidDef monoid = MonoidDef::idempotent();

  friend bool operator==(const CategorySpec&, const CategorySpec&) = default;
};

struct Scenario {
  std::string check = "counterexample-zmod6";
  CategorySpec category;
  int max_size = 36;
  std::vector<std::string> objects;  // explicit universe; overrides max_size when non-empty
  std::string functor = "default";   // default | identity | tensor_z2 | trivial_action
  std::string suite = "all";         // awfs | cloven | all
  std::string corrupt = "none";      // none | delta | mu
  Json square;                       // lift-query: {"f", "g", "h", "k"} morphism encodings
  std::string seed_order = "forward";
  bool deep = false;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

inline const std::vector<std::string>& check_kinds() {
  static const std::vector<std::string> kinds{"counterexample-zmod6", "counterexample-mset", "awfs-laws",
                                              "cloven-laws", "lift-query", "eq12"};
  return kinds;
}

/// Throws ParseError on malformed input, unknown keys or invalid values.
Scenario parse_scenario(const Json& j);
Scenario parse_scenario_text(const std::string& text);
Json emit_scenario(const Scenario& s);

SearchOptions search_options(const Scenario& s);
Mod make_mod(const Scenario& s);
/// The M-set category of the scenario; FinSet when the kind is finset.
MSet make_mset(const Scenario& s);

// -- text encodings ---------------------------------------------------------
/// "zmod6:[2,3]", with "d^k" for k repeated factors.
ModObject parse_module(const Mod& cat, const std::string& text);
/// "mset:{2,[1,1]}" (one table per non-unit monoid element) or "set:3".
MSetObject parse_mset(const MSet& cat, const std::string& text);
/// {"dom": ..., "cod": ..., "matrix": [[...]]}
ModMorphism parse_module_map(const Mod& cat, const Json& j);
/// {"dom": ..., "cod": ..., "table": [...]}
MSetMorphism parse_mset_map(const MSet& cat, const Json& j);
Json emit_module_map(const Mod& cat, const ModMorphism& f);
Json emit_mset_map(const MSet& cat, const MSetMorphism& f);

struct ReportCheck {
  CheckResult result;
  Json extra = Json::object();
  std::optional<double> elapsed_ms;
};

struct Report {
  Scenario scenario;
  std::vector<ReportCheck> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.result.pass) return false;
    }
    return true;
  }
};

Json emit_report(const Report& r);
std::string report_text(const Report& r);

}  // namespace wfs
