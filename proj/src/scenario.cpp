#include "wfs/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace wfs {

namespace {

constexpr const char* kScenarioSchema = "wfs-scenario/1";
constexpr const char* kReportSchema = "wfs-report/1";

void only_keys(const Json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw ParseError(where + " must be an object");
  for (const auto& [k, _] : j.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* allowed) { return k == allowed; })) {
      throw ParseError("unknown key '" + k + "' in " + where);
    }
  }
}

template <class T>
T field(const Json& j, const char* key, T fallback, const std::string& where) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(where + "." + key + " has the wrong type");
  }
}

std::string one_of(const std::string& value, const std::string& what, std::initializer_list<const char*> allowed) {
  if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return value == a; })) {
    throw ParseError("invalid " + what + " '" + value + "'");
  }
  return value;
}

int default_max_size(const Scenario& s) {
  const bool zmod = s.category.kind == "zmod";
  if (s.check == "counterexample-zmod6") return 36;
  if (s.check == "counterexample-mset") return 4;
  if (s.check == "awfs-laws" || s.check == "cloven-laws") return zmod ? 6 : 3;
  if (s.check == "eq12") return zmod ? 36 : 4;
  return 0;
}

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  bool eat(const std::string& token) {
    if (text_.compare(pos_, token.size(), token) != 0) return false;
    pos_ += token.size();
    return true;
  }
  void expect(const std::string& token) {
    if (!eat(token)) fail("expected '" + token + "'");
  }
  Index integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    try {
      return std::stoll(text_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      fail("number out of range");
    }
  }
  std::vector<int> int_list() {
    std::vector<int> out;
    expect("[");
    if (eat("]")) return out;
    do {
      out.push_back(static_cast<int>(integer()));
    } while (eat(","));
    expect("]");
    return out;
  }
  void end() {
    if (pos_ != text_.size()) fail("trailing characters");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + text_ + "' at column " + std::to_string(pos_) + ": " + what);
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

Json emit_monoid(const MonoidDef& m) {
  Json t = Json::array();
  for (const auto& row : m.mul) t.push_back(row);
  return Json{{"elements", m.names}, {"table", t}};
}

}  // namespace

Scenario parse_scenario(const Json& j) {
  only_keys(j, "scenario", {"schema", "check", "category", "universe", "params", "options"});
  if (j.contains("schema") && field<std::string>(j, "schema", "", "scenario") != kScenarioSchema) {
    throw ParseError("unsupported scenario schema");
  }
  Scenario s;
  if (!j.contains("check")) throw ParseError("scenario.check is required");
  s.check = field<std::string>(j, "check", "", "scenario");
  if (std::find(check_kinds().begin(), check_kinds().end(), s.check) == check_kinds().end()) {
    throw ParseError("unknown check '" + s.check + "'");
  }

  const Json cat = j.value("category", Json::object());
  only_keys(cat, "category", {"kind", "modulus", "monoid"});
  s.category.kind = one_of(field<std::string>(cat, "kind", "zmod", "category"), "category kind", {"zmod", "mset", "finset"});
  if (s.category.kind == "zmod") {
    if (cat.contains("monoid")) throw ParseError("category.monoid applies to mset only");
    s.category.modulus = field<int>(cat, "modulus", 6, "category");
    try {
      Mod check(s.category.modulus);
    } catch (const UnsupportedRing& e) {
      throw ParseError(std::string("category.modulus: ") + e.what());
    }
  } else {
    if (cat.contains("modulus")) throw ParseError("category.modulus applies to zmod only");
    if (s.category.kind == "finset") s.category.monoid = MonoidDef::trivial();
    if (cat.contains("monoid")) {
      if (s.category.kind == "finset") throw ParseError("category.monoid does not apply to finset");
      const Json& m = cat.at("monoid");
      only_keys(m, "category.monoid", {"elements", "table"});
      MonoidDef def;
      def.names = field<std::vector<std::string>>(m, "elements", {}, "category.monoid");
      def.mul = field<std::vector<std::vector<int>>>(m, "table", {}, "category.monoid");
      try {
        def.validate();
      } catch (const InvalidStructure& e) {
        throw ParseError(std::string("category.monoid: ") + e.what());
      }
      if (def.names.empty()) {
        for (int k = 0; k < def.order(); ++k) def.names.push_back(k == 0 ? "1" : "m" + std::to_string(k));
      }
      s.category.monoid = def;
    }
  }

  const Json uni = j.value("universe", Json::object());
  only_keys(uni, "universe", {"max_size", "objects"});
  s.max_size = field<int>(uni, "max_size", default_max_size(s), "universe");
  if (s.max_size < 0) throw ParseError("universe.max_size must be non-negative");
  s.objects = field<std::vector<std::string>>(uni, "objects", {}, "universe");

  const Json params = j.value("params", Json::object());
  only_keys(params, "params", {"functor", "suite", "corrupt", "square"});
  s.functor = one_of(field<std::string>(params, "functor", "default", "params"), "functor",
                     {"default", "identity", "tensor_z2", "trivial_action"});
  s.suite = one_of(field<std::string>(params, "suite", "all", "params"), "suite", {"awfs", "cloven", "all"});
  s.corrupt = one_of(field<std::string>(params, "corrupt", "none", "params"), "corruption", {"none", "delta", "mu"});
  if (params.contains("square")) {
    s.square = params.at("square");
    only_keys(s.square, "params.square", {"f", "g", "h", "k"});
    for (const char* k : {"f", "g", "h", "k"}) {
      if (!s.square.contains(k)) throw ParseError(std::string("params.square.") + k + " is required");
    }
  }
  if (s.check == "lift-query" && s.square.is_null()) throw ParseError("lift-query needs params.square");

  const Json opts = j.value("options", Json::object());
  only_keys(opts, "options", {"seed_order", "deep"});
  s.seed_order = one_of(field<std::string>(opts, "seed_order", "forward", "options"), "seed order", {"forward", "reverse"});
  s.deep = field<bool>(opts, "deep", false, "options");

  // validate object encodings up front
  if (s.category.kind == "zmod") {
    const Mod m = make_mod(s);
    for (const auto& o : s.objects) parse_module(m, o);
  } else {
    const MSet m = make_mset(s);
    for (const auto& o : s.objects) parse_mset(m, o);
  }
  return s;
}

Scenario parse_scenario_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  return parse_scenario(j);
}

Json emit_scenario(const Scenario& s) {
  Json cat{{"kind", s.category.kind}};
  if (s.category.kind == "zmod") cat["modulus"] = s.category.modulus;
  if (s.category.kind == "mset") cat["monoid"] = emit_monoid(s.category.monoid);
  Json params{{"functor", s.functor}, {"suite", s.suite}, {"corrupt", s.corrupt}};
  if (!s.square.is_null()) params["square"] = s.square;
  return Json{{"schema", kScenarioSchema},
              {"check", s.check},
              {"category", cat},
              {"universe", {{"max_size", s.max_size}, {"objects", s.objects}}},
              {"params", params},
              {"options", {{"seed_order", s.seed_order}, {"deep", s.deep}}}};
}

SearchOptions search_options(const Scenario& s) {
  return {s.seed_order == "reverse" ? SearchOrder::reverse : SearchOrder::forward, SearchOptions{}.cap};
}

Mod make_mod(const Scenario& s) { return Mod(s.category.modulus, search_options(s)); }

MSet make_mset(const Scenario& s) {
  return MSet(s.category.kind == "finset" ? MonoidDef::trivial() : s.category.monoid, search_options(s));
}

ModObject parse_module(const Mod& cat, const std::string& text) {
  Cursor c(text);
  c.expect("zmod");
  const Index n = c.integer();
  if (n != cat.modulus()) c.fail("modulus differs from the scenario's ring");
  c.expect(":[");
  std::map<int, Index> counts;
  if (!c.eat("]")) {
    do {
      const Index d = c.integer();
      Index k = 1;
      if (c.eat("^")) k = c.integer();
      if (d <= 1 || n % d != 0) c.fail("factor " + std::to_string(d) + " is not a divisor > 1 of " + std::to_string(n));
      counts[static_cast<int>(d)] += k;
    } while (c.eat(","));
    c.expect("]");
  }
  c.end();
  ModObject out{cat.modulus(), {}};
  for (const auto& [d, k] : counts) {
    if (k > 0) out.groups.push_back({d, k});
  }
  return out;
}

MSetObject parse_mset(const MSet& cat, const std::string& text) {
  Cursor c(text);
  try {
    if (c.eat("set:")) {
      const Index n = c.integer();
      c.end();
      if (!cat.is_trivial_monoid()) c.fail("a plain set in an M-set scenario; use mset:{...}");
      return cat.object(static_cast<int>(n), {});
    }
    c.expect("mset:{");
    const Index n = c.integer();
    std::vector<std::vector<int>> tables;
    while (c.eat(",")) tables.push_back(c.int_list());
    c.expect("}");
    c.end();
    return cat.object(static_cast<int>(n), tables);
  } catch (const InvalidStructure& e) {
    throw ParseError("'" + text + "': " + e.what());
  }
}

ModMorphism parse_module_map(const Mod& cat, const Json& j) {
  only_keys(j, "module map", {"dom", "cod", "matrix"});
  const auto dom = parse_module(cat, field<std::string>(j, "dom", "", "map"));
  const auto cod = parse_module(cat, field<std::string>(j, "cod", "", "map"));
  auto a = field<std::vector<std::vector<Index>>>(j, "matrix", {}, "map");
  if (a.empty() && !cod.groups.empty()) throw ParseError("map.matrix is required");
  try {
    return cat.from_matrix(dom, cod, a);
  } catch (const InvalidStructure& e) {
    throw ParseError(std::string("map.matrix: ") + e.what());
  }
}

MSetMorphism parse_mset_map(const MSet& cat, const Json& j) {
  only_keys(j, "M-set map", {"dom", "cod", "table"});
  const auto dom = parse_mset(cat, field<std::string>(j, "dom", "", "map"));
  const auto cod = parse_mset(cat, field<std::string>(j, "cod", "", "map"));
  try {
    return cat.morphism(dom, cod, field<std::vector<int>>(j, "table", {}, "map"));
  } catch (const InvalidStructure& e) {
    throw ParseError(std::string("map.table: ") + e.what());
  }
}

Json emit_module_map(const Mod& cat, const ModMorphism& f) {
  return Json{{"dom", cat.describe(f.dom())}, {"cod", cat.describe(f.cod())}, {"matrix", cat.to_matrix(f)}};
}

Json emit_mset_map(const MSet& cat, const MSetMorphism& f) {
  return Json{{"dom", cat.describe(f.dom())}, {"cod", cat.describe(f.cod())}, {"table", f.table()}};
}

Json emit_report(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json counts = Json::object();
    for (const auto& [k, v] : c.result.counts) counts[k] = v;
    Json entry{{"id", c.result.id},
               {"status", c.result.pass ? "pass" : "fail"},
               {"summary", c.result.summary},
               {"witnesses", c.result.witnesses},
               {"counts", counts}};
    for (const auto& [k, v] : c.extra.items()) entry[k] = v;
    if (c.elapsed_ms) entry["elapsed_ms"] = *c.elapsed_ms;
    checks.push_back(entry);
  }
  return Json{{"schema", kReportSchema},
              {"scenario", emit_scenario(r.scenario)},
              {"checks", checks},
              {"verdict", r.passed() ? "PASS" : "FAIL"}};
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  const auto& s = r.scenario;
  os << "check     " << s.check << "\n";
  os << "category  " << (s.category.kind == "zmod" ? "zmod" + std::to_string(s.category.modulus) : s.category.kind) << "\n";
  os << "max_size  " << s.max_size << "\n\n";
  for (const auto& c : r.checks) {
    os << (c.result.pass ? "pass  " : "FAIL  ") << c.result.id << "  " << c.result.summary;
    if (c.elapsed_ms) os << "  (" << static_cast<long long>(*c.elapsed_ms) << " ms)";
    os << "\n";
    for (const auto& w : c.result.witnesses) os << "        " << w << "\n";
  }
  os << "\nverdict " << (r.passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace wfs
