#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wfs/runners.hpp"

namespace {

struct Flags {
  std::string scenario;
  std::string out;
  int max_size = -1;
  std::string format = "text";
  std::string seed_order;
  std::string suite;
  std::string functor;
  std::string corrupt;
  std::string category;
  bool deep = false;
  bool timing = false;
};

wfs::Json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wfs::ParseError("cannot read scenario file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return wfs::Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw wfs::ParseError(path + " is not valid JSON: " + e.what());
  }
}

/// Scenario file (if any) with command-line flags laid over it.
wfs::Scenario build(const Flags& f, const std::string& command, const std::string& check) {
  wfs::Json j = f.scenario.empty() ? wfs::Json{{"check", check}} : load(f.scenario);
  if (!j.is_object()) throw wfs::ParseError("scenario must be an object");
  if (f.scenario.empty()) {
    if (check == "counterexample-mset") j["category"] = {{"kind", "mset"}};
  } else if (command == "verify zmod6" || command == "verify mset") {
    if (j.value("check", "") != check) throw wfs::ParseError(command + " expects a " + check + " scenario");
  } else if (command == "laws") {
    const auto c = j.value("check", "");
    if (c != "awfs-laws" && c != "cloven-laws") throw wfs::ParseError("laws expects an awfs-laws or cloven-laws scenario");
  } else if (j.value("check", "") != check) {
    throw wfs::ParseError(command + " expects a " + check + " scenario");
  }
  if (!f.category.empty()) {
    if (!f.scenario.empty()) throw wfs::ParseError("--category conflicts with --scenario");
    j["category"] = {{"kind", f.category}};
  }
  auto section = [&](const char* key) -> wfs::Json& {
    if (!j.contains(key)) j[key] = wfs::Json::object();
    return j[key];
  };
  if (f.max_size >= 0) section("universe")["max_size"] = f.max_size;
  if (!f.suite.empty()) section("params")["suite"] = f.suite;
  if (!f.functor.empty()) section("params")["functor"] = f.functor;
  if (!f.corrupt.empty()) section("params")["corrupt"] = f.corrupt;
  if (!f.seed_order.empty()) section("options")["seed_order"] = f.seed_order;
  if (f.deep) section("options")["deep"] = true;
  return wfs::parse_scenario(j);
}

void emit(const Flags& f, const wfs::Report& r) {
  const std::string body = f.format == "machine" ? wfs::emit_report(r).dump(2) + "\n" : wfs::report_text(r);
  if (f.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(f.out);
  if (!out) throw wfs::UsageError("cannot write " + f.out);
  out << body;
}

void add_flags(CLI::App* app, Flags& f) {
  app->add_option("--scenario", f.scenario, "scenario file (JSON)");
  app->add_option("--out", f.out, "write the report here instead of stdout");
  app->add_option("--max-size", f.max_size, "largest object size in the universe")->check(CLI::NonNegativeNumber);
  app->add_option("--format", f.format, "report format")->check(CLI::IsMember({"text", "machine"}));
  app->add_option("--seed-order", f.seed_order, "enumeration order of searches")->check(CLI::IsMember({"forward", "reverse"}));
  app->add_option("--suite", f.suite, "law suite")->check(CLI::IsMember({"awfs", "cloven", "all"}));
  app->add_option("--functor", f.functor, "comparison functor")
      ->check(CLI::IsMember({"default", "identity", "tensor_z2", "trivial_action"}));
  app->add_option("--corrupt", f.corrupt, "negative-control structure maps")->check(CLI::IsMember({"none", "delta", "mu"}));
  app->add_option("--category", f.category, "category kind")->check(CLI::IsMember({"zmod", "mset", "finset"}));
  app->add_flag("--deep", f.deep, "allow universes beyond the default budget");
  app->add_flag("--timing", f.timing, "record elapsed_ms per check");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite checks of weak factorization system machinery"};
  app.require_subcommand(1);
  Flags flags;
  auto* verify = app.add_subcommand("verify", "reproduce a counterexample");
  verify->require_subcommand(1);
  auto* zmod6 = verify->add_subcommand("zmod6", "modules over Z/6 and tensoring with Z/2");
  auto* mset = verify->add_subcommand("mset", "sets and M-sets for M = {1, e}");
  auto* laws = app.add_subcommand("laws", "AWFS and cloven-map law suites");
  auto* lift = app.add_subcommand("lift", "filler for a square given in a scenario");
  auto* eq12 = app.add_subcommand("eq12", "compare Retr(V^-1 ExistsL) with V^-1 Retr(ExistsL)");
  for (auto* sub : {zmod6, mset, laws, lift, eq12}) add_flags(sub, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    wfs::Scenario s;
    if (zmod6->parsed()) {
      s = build(flags, "verify zmod6", "counterexample-zmod6");
    } else if (mset->parsed()) {
      s = build(flags, "verify mset", "counterexample-mset");
    } else if (laws->parsed()) {
      s = build(flags, "laws", "awfs-laws");
    } else if (lift->parsed()) {
      if (flags.scenario.empty()) throw wfs::ParseError("lift needs --scenario");
      s = build(flags, "lift", "lift-query");
    } else {
      s = build(flags, "eq12", "eq12");
    }
    const wfs::Report r = wfs::run_scenario(s, {flags.timing});
    emit(flags, r);
    return r.passed() ? 0 : 1;
  } catch (const wfs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
