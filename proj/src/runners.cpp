#include "wfs/runners.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "wfs/suites.hpp"

namespace wfs {

namespace {

template <class F>
void add_checks(Report& report, const RunOptions& o, F&& produce) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<ReportCheck> checks = produce();
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  for (auto& c : checks) {
    if (o.timing) c.elapsed_ms = ms;
    report.checks.push_back(std::move(c));
  }
}

std::vector<ReportCheck> wrap(std::vector<CheckResult> results) {
  std::vector<ReportCheck> out;
  for (auto& r : results) out.push_back({std::move(r), Json::object(), std::nullopt});
  return out;
}

template <class T>
void append_unique(std::vector<T>& xs, const T& x) {
  if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
}

std::vector<ModObject> source_modules(const Mod& m, const Scenario& s) {
  if (s.objects.empty()) return m.modules_up_to(s.max_size);
  std::vector<ModObject> out;
  for (const auto& text : s.objects) append_unique(out, parse_module(m, text));
  return out;
}

std::vector<MSetObject> listed_msets(const MSet& m, const Scenario& s) {
  std::vector<MSetObject> out;
  for (const auto& text : s.objects) append_unique(out, parse_mset(m, text));
  return out;
}

Json rows_json(const ComparisonReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"arrow", row.arrow},
                    {"image", row.image},
                    {"in_preimage", row.in_preimage},
                    {"in_retr_preimage", row.in_retr_preimage},
                    {"in_preimage_retr", row.in_preimage_retr},
                    {"retr_preimage_via", row.retr_preimage_via},
                    {"preimage_retr_via", row.preimage_retr_via}});
  }
  return rows;
}

ReportCheck inclusion_check(const ComparisonReport& r) {
  CheckResult c{"eq12.inclusion", r.inclusion_holds(), "", r.violations, {}};
  if (c.witnesses.size() > 8) c.witnesses.resize(8);
  c.counts["arrows"] = static_cast<std::int64_t>(r.rows.size());
  c.counts["violations"] = static_cast<std::int64_t>(r.violations.size());
  c.counts["strictness_witnesses"] = static_cast<std::int64_t>(r.witnesses.size());
  c.counts["transported_retracts"] = static_cast<std::int64_t>(r.images_checked);
  c.summary = "Retr(V^-1 ExistsL) inside V^-1 Retr(ExistsL) on " + std::to_string(r.rows.size()) + " arrows with " +
              std::to_string(r.violations.size()) + " violations; " + std::to_string(r.witnesses.size()) +
              " strictness witnesses";
  Json extra{{"functor", r.functor}, {"strictness_witnesses", r.witnesses}, {"rows", rows_json(r)}};
  return {c, extra, std::nullopt};
}

ComparisonReport compare_modules(const Mod& m, const Awfs<Mod>& w, const FunctorDef<Mod, Mod>& v,
                                 const std::vector<ModObject>& objects) {
  if (v.name == "identity") {
    const auto u = arrows_from_initial(m, objects);
    return eq12_compare(m, v, u, w, u);
  }
  Index rank = 0;
  for (const auto& x : objects) rank = std::max(rank, v.object(x).coordinate_count());
  auto targets = objects;
  for (const auto& x : objects) append_unique(targets, v.object(x));
  for (Index k = 1; k <= rank; ++k) append_unique(targets, m.free_module(k));
  return eq12_compare(m, v, arrows_from_initial(m, objects), w, arrows_from_initial(m, targets));
}

FunctorDef<Mod, Mod> module_functor(const Mod& m, const std::string& name) {
  if (name == "identity") return identity_functor<Mod>();
  if (name == "default" || name == "tensor_z2") {
    if (m.modulus() != 6) throw UsageError("tensor_z2 needs modulus 6");
    return tensor_z2(m);
  }
  throw UsageError("functor " + name + " does not act on modules");
}

std::vector<MSetObject> trivial_sets(const MSet& sets, int max_size) {
  std::vector<MSetObject> out;
  for (int k = 0; k <= max_size; ++k) out.push_back(sets.trivial_action(k));
  return out;
}

/// Sets of size <= max_size against all M-sets of size <= 4, the free M-sets on
/// up to max_size generators and any listed objects.
ComparisonReport compare_sets(const Scenario& s, const MSet& sets, const FunctorDef<MSet, MSet>& v, const Awfs<MSet>& w,
                              const std::vector<MSetObject>& source) {
  const MSet& ms = w.category();
  auto targets = ms.objects_up_to(std::min(s.max_size, 4));
  for (int k = 1; k <= s.max_size; ++k) append_unique(targets, ms.free_on(k));
  for (const auto& x : listed_msets(ms, s)) append_unique(targets, x);
  return eq12_compare(sets, v, arrows_from_initial(sets, source), w, arrows_from_initial(ms, targets));
}

bool only_threes(const ModObject& x) {
  return std::all_of(x.groups.begin(), x.groups.end(), [](const auto& g) { return g.first == 3; });
}

void require_deep(const Scenario& s, int limit, const std::string& what) {
  if (s.max_size > limit && !s.deep) {
    throw UsageError(what + " beyond size " + std::to_string(limit) + " needs --deep");
  }
}

// A non-identity endomorphism of the free object PB.
ModMorphism scramble(const Mod& cat, const ModObject& pb) { return cat.zero(pb, pb); }

MSetMorphism scramble(const MSet& cat, const MSetObject& pb) {
  const auto& mul = cat.monoid().mul;
  const int order = static_cast<int>(mul.size());
  if (order == 1) throw UsageError("corrupted fixtures need a nontrivial monoid");
  const int gens = pb.size() / order;
  std::vector<int> table(static_cast<std::size_t>(pb.size()));
  for (int m = 0; m < order; ++m) {
    for (int y = 0; y < gens; ++y) table[static_cast<std::size_t>(m * gens + y)] = mul[m][order - 1] * gens + y;
  }
  return cat.morphism(pb, pb, table);
}

/// k = [Lf, ι₂∘σ]: Ef -> Ef, fixing the image of Lf.
template <FiniteCategory C>
typename C::Morphism corrupting_endo(const Awfs<C>& a, const typename C::Morphism& f) {
  const auto& cat = a.category();
  const auto t = a.factorize(f);
  return cat.copair(t.L, cat.compose(t.inj2, scramble(cat, a.comonad().object(f.cod()))));
}

template <FiniteCategory C>
void corrupt(Awfs<C>& w, const std::string& which) {
  using M = typename C::Morphism;
  if (which == "delta") {
    // δ' = k_{Lf}∘δ_f
    w.delta_override = [](const Awfs<C>& a, const M& f) {
      return a.category().compose(corrupting_endo(a, a.L(f)), a.delta_formula(f));
    };
  } else if (which == "mu") {
    // μ' = k∘μ_f
    w.mu_override = [](const Awfs<C>& a, const M& f) {
      return a.category().compose(corrupting_endo(a, f), a.mu_formula(f));
    };
  }
}

template <FiniteCategory C>
std::vector<ClassSpec<C>> closure_chain(const C& cat) {
  using M = typename C::Morphism;
  return {{"iso", [cat](const M& f) { return cat.is_mono(f) && cat.is_epi(f); }, "structural"},
          {"split_mono",
           [cat](const M& f) {
             return first_solution(cat, ProblemOf<C>{f.cod(), f.dom(), {{f, cat.identity(f.dom())}}, {}}).has_value();
           },
           "search"},
          {"mono", [cat](const M& f) { return cat.is_mono(f); }, "structural"},
          {"all", [](const M&) { return true; }, "structural"}};
}

template <FiniteCategory C>
void law_sweeps(Report& report, const RunOptions& o, const Awfs<C>& w, const std::string& suite,
                const Universe<C>& laws, const Universe<C>& comonad, const Universe<C>& sweep,
                const Universe<C>& cloven, const Universe<C>* pointwise = nullptr) {
  const auto& cat = w.category();
  // structure maps that break the laws can make a sweep abort half way; report the group as failed
  auto guarded = [&](const std::string& id, const std::function<std::vector<ReportCheck>()>& produce) {
    add_checks(report, o, [&] {
      try {
        return produce();
      } catch (const InvalidStructure& e) {
        return wrap({CheckResult{id, false, std::string("aborted: ") + e.what(), {e.what()}, {{"failures", 1}}}});
      } catch (const NonCommutingSquare& e) {
        return wrap({CheckResult{id, false, std::string("aborted: ") + e.what(), {e.what()}, {{"failures", 1}}}});
      }
    });
  };
  if (suite != "cloven") {
    guarded("awfs.laws", [&] { return wrap({from_law_report("awfs.laws", check_awfs_laws(w, laws))}); });
    if (pointwise) {
      guarded("awfs.laws_pointwise", [&] {
        return wrap({from_law_report("awfs.laws_pointwise", check_awfs_laws(w, *pointwise, false))});
      });
    }
    guarded("comonad.laws", [&] {
      return wrap({from_law_report("comonad.laws", check_comonad_laws(cat, w.comonad(), comonad))});
    });
    guarded("r_class.split_epi", [&] { return wrap({check_r_class(w, sweep)}); });
    guarded("l_class.mono", [&] { return wrap({check_l_class_mono(w, sweep, std::is_same_v<C, Mod>)}); });
  }
  if (suite != "awfs") {
    guarded("cloven.retract_argument", [&] { return wrap({check_retract_argument(w, sweep)}); });
    guarded("cloven.identity", [&] { return wrap({check_identity_cleavages(w, sweep)}); });
    guarded("cloven.calculus", [&] { return wrap(check_cloven_calculus(w, cloven)); });
    guarded("oracle.lift", [&] { return wrap(check_lift_oracles(w, cloven)); });
    guarded("oracle.retract_closure", [&] { return wrap({check_retract_closure(cat, cloven, closure_chain(cat))}); });
  }
}

template <FiniteCategory C>
Report lift_query(const Scenario& s, const RunOptions& o, const C& cat, const SquareOf<C>& sq) {
  if (!(sq.h.dom() == sq.f.dom()) || !(sq.h.cod() == sq.g.dom()) || !(sq.k.dom() == sq.f.cod()) ||
      !(sq.k.cod() == sq.g.cod())) {
    throw UsageError("square boundaries do not match: h must run dom f -> dom g and k cod f -> cod g");
  }
  if (!square_commutes(cat, sq)) throw UsageError("square does not commute");
  Report report{s, {}};
  add_checks(report, o, [&] {
    CheckResult c{"lift.filler", true, "", {}, {}};
    Json extra = Json::object();
    std::int64_t candidates = 0;
    cat.for_each_solution(ProblemOf<C>{sq.f.cod(), sq.g.dom(), {{sq.f, sq.h}}, {}}, [&](const auto&) {
      ++candidates;
      return true;
    });
    c.counts["candidates"] = candidates;
    const auto d = find_filler(cat, sq);
    const C reversed = cat.with_options({SearchOrder::reverse, cat.options().cap});
    const bool agrees = find_filler(reversed, sq).has_value() == d.has_value();
    if (!agrees) c.fail("reversed enumeration disagrees on existence");
    if (d) {
      c.summary = "filler found";
      c.witnesses.push_back(cat.describe(*d));
    } else {
      c.summary = "no filler: exhaustive search finds " + std::to_string(candidates) + " maps d with d.f = h, none with g.d = k";
    }
    if constexpr (std::is_same_v<C, Mod>) {
      extra["filler"] = d ? emit_module_map(cat, *d) : Json();
    } else {
      extra["filler"] = d ? emit_mset_map(cat, *d) : Json();
    }
    return std::vector<ReportCheck>{{c, extra, std::nullopt}};
  });
  return report;
}

}  // namespace

Report run_zmod6_counterexample(const Scenario& s, const RunOptions& o) {
  if (s.category.kind != "zmod" || s.category.modulus != 6) throw UsageError("counterexample-zmod6 runs over Z/6");
  if (s.max_size < 6) throw UsageError("counterexample-zmod6 needs max_size >= 6");
  const Mod m = make_mod(s);
  const auto v = module_functor(m, s.functor);
  const Awfs<Mod> w(m, free_forgetful_comonad(m));
  const auto objects = source_modules(m, s);
  Report report{s, {}};

  ComparisonReport cmp;
  add_checks(report, o, [&] {
    cmp = compare_modules(m, w, v, objects);
    return std::vector<ReportCheck>{inclusion_check(cmp)};
  });

  add_checks(report, o, [&] {
    const auto target = m.describe(initial_map(m, m.module({6})));
    CheckResult c{"zmod6.strictness_witness", false, target + " not in the universe", {}, {}};
    for (const auto& row : cmp.rows) {
      if (row.arrow != target) continue;
      c.pass = row.in_preimage_retr && !row.in_retr_preimage;
      c.summary = target + (row.in_preimage_retr ? " in" : " not in") + " V^-1 Retr(ExistsL) and" +
                  (row.in_retr_preimage ? " in" : " not in") + " Retr(V^-1 ExistsL)";
      if (row.in_preimage_retr) c.witnesses.push_back("V image is a retract of " + row.preimage_retr_via);
    }
    return std::vector<ReportCheck>{{c, Json::object(), std::nullopt}};
  });

  add_checks(report, o, [&] {
    CheckResult c{"zmod6.characterization", true, "", {}, {}};
    for (std::size_t n = 0; n < objects.size(); ++n) {
      const auto& row = cmp.rows[n];
      const bool expected = only_threes(objects[n]);
      ++c.counts["objects"];
      if (expected) ++c.counts["no_2_torsion"];
      if (row.in_preimage != expected) c.fail(row.arrow + ": in V^-1 ExistsL is " + std::to_string(row.in_preimage));
      if (row.in_retr_preimage != expected) {
        c.fail(row.arrow + ": in Retr(V^-1 ExistsL) is " + std::to_string(row.in_retr_preimage));
      }
      const auto size = m.cardinality(objects[n]);
      if (size && *size <= 8) {
        ++c.counts["search_checked"];
        const bool search = exists_l_membership_by_search(w, v.morphism(initial_map(m, objects[n])));
        if (search != row.in_preimage) c.fail(row.arrow + ": coalgebra search says " + std::to_string(search));
      }
    }
    c.summary = std::to_string(c.counts["no_2_torsion"]) + " of " + std::to_string(c.counts["objects"]) +
                " modules lack 2-torsion; exactly these lie in V^-1 ExistsL and Retr(V^-1 ExistsL)";
    return std::vector<ReportCheck>{{c, Json::object(), std::nullopt}};
  });

  add_checks(report, o, [&] {
    std::vector<ModObject> small;
    for (const auto& x : m.modules_up_to(std::min(s.max_size, 8))) small.push_back(x);
    return wrap({check_cofibrant_objects(w, small)});
  });
  return report;
}

Report run_mset_counterexample(const Scenario& s, const RunOptions& o) {
  if (s.category.kind != "mset") throw UsageError("counterexample-mset runs over M-sets");
  if (s.max_size < 1) throw UsageError("counterexample-mset needs max_size >= 1");
  if (s.functor != "default" && s.functor != "trivial_action") throw UsageError("counterexample-mset uses trivial_action");
  const MSet ms = make_mset(s);
  const MSet sets = finset(search_options(s));
  const Awfs<MSet> w(ms, free_forgetful_comonad(ms));
  const auto v = trivial_action(sets, ms);

  const auto source = trivial_sets(sets, s.max_size);

  Report report{s, {}};
  ComparisonReport cmp;
  add_checks(report, o, [&] {
    cmp = compare_sets(s, sets, v, w, source);
    return std::vector<ReportCheck>{inclusion_check(cmp)};
  });
  add_checks(report, o, [&] {
    CheckResult all{"mset.preimage_retr_all", true, "", {}, {}};
    CheckResult empty{"mset.retr_preimage_only_empty", true, "", {}, {}};
    for (std::size_t n = 0; n < source.size(); ++n) {
      const auto& row = cmp.rows[n];
      ++all.counts["arrows"];
      if (row.in_preimage_retr) {
        ++all.counts["members"];
      } else {
        all.fail(row.arrow);
      }
      const bool expected = source[n].size() == 0;
      if (row.in_retr_preimage) ++empty.counts["members"];
      if (row.in_retr_preimage != expected) empty.fail(row.arrow + ": in Retr(V^-1 ExistsL) is " + std::to_string(row.in_retr_preimage));
    }
    all.summary = std::to_string(all.counts["members"]) + " of " + std::to_string(all.counts["arrows"]) +
                  " arrows from the empty set lie in V^-1 Retr(ExistsL)";
    empty.summary = std::to_string(empty.counts["members"]) + " arrow(s) lie in Retr(V^-1 ExistsL); expected only the empty set";
    return wrap({all, empty});
  });
  add_checks(report, o, [&] {
    const auto f = initial_map(ms, ms.trivial_action(1));
    CheckResult c{"mset.gap_witness", true, "", {}, {}};
    const auto cleavages = enumerate_left_cleavages(w, f);
    const bool coalgebra = exists_l_membership_by_search(w, f);
    c.counts["cleavages"] = static_cast<std::int64_t>(cleavages.size());
    c.pass = !cleavages.empty() && !coalgebra;
    for (const auto& cl : cleavages) c.witnesses.push_back("cleavage s = " + ms.describe(cl.s));
    c.summary = ms.describe(f) + " has " + std::to_string(cleavages.size()) + " cleavage(s) and " +
                (coalgebra ? "a" : "no") + " coalgebra structure";
    return std::vector<ReportCheck>{{c, Json::object(), std::nullopt}};
  });
  return report;
}

Report run_law_suite(const Scenario& s, const RunOptions& o) {
  std::string suite = s.suite;
  if (s.check == "cloven-laws") {
    if (suite == "awfs") throw UsageError("cloven-laws does not run the awfs suite");
    suite = "cloven";
  }
  Report report{s, {}};
  if (s.category.kind == "zmod") {
    require_deep(s, 6, "module law sweeps");
    const Mod m = make_mod(s);
    Awfs<Mod> w(m, free_forgetful_comonad(m));
    corrupt(w, s.corrupt);
    const auto objects = source_modules(m, s);
    const auto sweep = full_universe(m, objects);
    // E(Lf) of any arrow into a nonzero module has too many elements to index
    const Universe<Mod> laws = full_universe(m, {m.initial()});
    const auto comonad = full_universe(m, m.modules_up_to(std::min(s.max_size, s.deep ? 6 : 3)));
    const auto cloven = full_universe(m, m.modules_up_to(std::min(s.max_size, 3)));
    law_sweeps(report, o, w, suite, laws, comonad, sweep, cloven);
  } else {
    require_deep(s, 3, "M-set law sweeps");
    const MSet ms = make_mset(s);
    Awfs<MSet> w(ms, free_forgetful_comonad(ms));
    corrupt(w, s.corrupt);
    auto objects = s.objects.empty() ? ms.objects_up_to(s.max_size) : listed_msets(ms, s);
    const auto sweep = full_universe(ms, objects);
    // naturality over every square of the size-3 universe is far beyond the budget
    const auto small = full_universe(ms, ms.objects_up_to(std::min(s.max_size, 2)));
    const auto comonad = full_universe(ms, ms.objects_up_to(std::min(s.max_size, 3)));
    law_sweeps(report, o, w, suite, small, comonad, sweep, small, s.deep ? &comonad : nullptr);
  }
  return report;
}

Report run_lift_query(const Scenario& s, const RunOptions& o) {
  if (s.square.is_null()) throw ParseError("lift-query needs params.square");
  if (s.category.kind == "zmod") {
    const Mod m = make_mod(s);
    const SquareOf<Mod> sq{parse_module_map(m, s.square.at("f")), parse_module_map(m, s.square.at("g")),
                           parse_module_map(m, s.square.at("h")), parse_module_map(m, s.square.at("k"))};
    return lift_query(s, o, m, sq);
  }
  const MSet ms = make_mset(s);
  const SquareOf<MSet> sq{parse_mset_map(ms, s.square.at("f")), parse_mset_map(ms, s.square.at("g")),
                          parse_mset_map(ms, s.square.at("h")), parse_mset_map(ms, s.square.at("k"))};
  return lift_query(s, o, ms, sq);
}

Report run_eq12(const Scenario& s, const RunOptions& o) {
  Report report{s, {}};
  if (s.category.kind == "zmod") {
    const Mod m = make_mod(s);
    const auto v = module_functor(m, s.functor);
    const Awfs<Mod> w(m, free_forgetful_comonad(m));
    const auto objects = source_modules(m, s);
    add_checks(report, o, [&] { return std::vector<ReportCheck>{inclusion_check(compare_modules(m, w, v, objects))}; });
    return report;
  }
  const MSet ms = make_mset(s);
  const Awfs<MSet> w(ms, free_forgetful_comonad(ms));
  if (s.functor == "identity") {
    const auto objects = s.objects.empty() ? ms.objects_up_to(s.max_size) : listed_msets(ms, s);
    add_checks(report, o, [&] {
      const auto u = arrows_from_initial(ms, objects);
      const auto cmp = eq12_compare(ms, identity_functor<MSet>(), u, w, u);
      return std::vector<ReportCheck>{inclusion_check(cmp)};
    });
    return report;
  }
  if (s.category.kind != "mset" || (s.functor != "default" && s.functor != "trivial_action")) {
    throw UsageError("eq12 over " + s.category.kind + " supports functor identity" +
                     (s.category.kind == "mset" ? " or trivial_action" : ""));
  }
  const MSet sets = finset(search_options(s));
  const auto v = trivial_action(sets, ms);
  add_checks(report, o, [&] {
    return std::vector<ReportCheck>{inclusion_check(compare_sets(s, sets, v, w, trivial_sets(sets, s.max_size)))};
  });
  return report;
}

Report run_scenario(const Scenario& s, const RunOptions& o) {
  if (s.check == "counterexample-zmod6") return run_zmod6_counterexample(s, o);
  if (s.check == "counterexample-mset") return run_mset_counterexample(s, o);
  if (s.check == "awfs-laws" || s.check == "cloven-laws") return run_law_suite(s, o);
  if (s.check == "lift-query") return run_lift_query(s, o);
  if (s.check == "eq12") return run_eq12(s, o);
  throw ParseError("unknown check '" + s.check + "'");
}

}  // namespace wfs
