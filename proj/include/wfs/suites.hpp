#pragma once

// Exhaustive property sweeps over finite universes. Each returns a CheckResult
// naming the first few counterexamples; the CLI and the acceptance binary share
// them.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wfs/analysis.hpp"

namespace wfs {

struct CheckResult {
  std::string id;
  bool pass = true;
  std::string summary;
  std::vector<std::string> witnesses;
  std::map<std::string, std::int64_t> counts;

  void fail(const std::string& what) {
    pass = false;
    ++counts["failures"];
    if (witnesses.size() < 8) witnesses.push_back(what);
  }
};

inline CheckResult from_law_report(const std::string& id, const LawReport& r) {
  CheckResult c{id, r.passed(), "", {}, {}};
  c.counts["checked"] = static_cast<std::int64_t>(r.results.size());
  c.counts["passed"] = static_cast<std::int64_t>(r.count(LawStatus::pass));
  c.counts["skipped"] = static_cast<std::int64_t>(r.count(LawStatus::skipped));
  c.counts["failures"] = static_cast<std::int64_t>(r.count(LawStatus::fail));
  for (const auto& res : r.results) {
    if (res.status != LawStatus::fail) continue;
    ++c.counts["failures." + res.law];
    if (c.witnesses.size() < 8) c.witnesses.push_back(res.law + " at " + res.subject_text + ": " + res.detail);
  }
  c.summary = std::to_string(c.counts["passed"]) + "/" + std::to_string(c.counts["checked"]) + " laws hold";
  if (c.counts["skipped"] > 0) c.summary += ", " + std::to_string(c.counts["skipped"]) + " skipped";
  return c;
}

/// right cleavage ⇔ P-section ⇔ epi, for every arrow.
template <FiniteCategory C>
CheckResult check_r_class(const Awfs<C>& w, const Universe<C>& u) {
  const auto& cat = w.category();
  CheckResult c{"r_class.split_epi", true, "", {}, {}};
  for (const auto& g : u.arrows) {
    const bool right = find_cleavage_right(w, g).has_value();
    const bool section = w.find_p_section(g).has_value();
    const bool epi = cat.is_epi(g);
    ++c.counts["arrows"];
    if (epi) ++c.counts["epis"];
    if (right != section || section != epi) {
      c.fail(cat.describe(g) + ": cleavage " + std::to_string(right) + ", section " + std::to_string(section) +
             ", epi " + std::to_string(epi));
    }
  }
  c.summary = std::to_string(c.counts["epis"]) + " of " + std::to_string(c.counts["arrows"]) +
              " arrows are epi; right cleavage, P-section and epi agree";
  return c;
}

/// left cleavage ⇔ mono, for every arrow; with converse = false only cloven ⇒ mono.
template <FiniteCategory C>
CheckResult check_l_class_mono(const Awfs<C>& w, const Universe<C>& u, bool converse = true) {
  const auto& cat = w.category();
  CheckResult c{converse ? "l_class.mono" : "l_class.cloven_mono", true, "", {}, {}};
  for (const auto& f : u.arrows) {
    const bool left = find_cleavage_left(w, f).has_value();
    const bool mono = cat.is_mono(f);
    ++c.counts["arrows"];
    if (left) ++c.counts["cloven"];
    if (mono) ++c.counts["monos"];
    if ((left && !mono) || (converse && mono && !left)) {
      c.fail(cat.describe(f) + ": cleavage " + std::to_string(left) + ", mono " + std::to_string(mono));
    }
  }
  c.summary = std::to_string(c.counts["cloven"]) + " of " + std::to_string(c.counts["arrows"]) + " arrows cloven, " +
              std::to_string(c.counts["monos"]) + " mono; " + (converse ? "cloven iff mono" : "cloven implies mono");
  return c;
}

/// f has a left cleavage iff f is a retract of Lf; each direction is also
/// checked constructively.
template <FiniteCategory C>
CheckResult check_retract_argument(const Awfs<C>& w, const Universe<C>& u) {
  const auto& cat = w.category();
  CheckResult c{"cloven.retract_argument", true, "", {}, {}};
  for (const auto& f : u.arrows) {
    ++c.counts["arrows"];
    const auto t = w.factorize(f);
    const auto cleavage = find_cleavage_left(w, f);
    const auto retract = is_retract_of(cat, f, t.L);
    if (cleavage.has_value() != retract.has_value()) {
      c.fail(cat.describe(f) + ": cleavage " + std::to_string(cleavage.has_value()) + ", retract of Lf " +
             std::to_string(retract.has_value()));
      continue;
    }
    if (!cleavage) continue;
    ++c.counts["cloven"];
    const auto id_a = cat.identity(f.dom());
    const RetractWitness<C> forward{id_a, cleavage->s, id_a, t.R};
    if (!is_retract_witness(cat, f, t.L, forward)) c.fail(cat.describe(f) + ": (1, s) and (1, Rf) do not exhibit a retract");
    // transport the cleavage δ_f of Lf back along the retraction
    const auto s = cat.compose(w.e_on_square(t.L, f, retract->r, retract->q), cat.compose(w.delta(f), retract->j));
    if (!is_left_cleavage(w, LeftCleavage<C>{f, s})) c.fail(cat.describe(f) + ": transported map is not a cleavage");
  }
  c.summary = std::to_string(c.counts["cloven"]) + " of " + std::to_string(c.counts["arrows"]) +
              " arrows cloven; cloven iff retract of Lf";
  return c;
}

/// Exactly one cleavage on each identity, namely L1; and E(1_A, f)∘L1_A = s∘f
/// for every cleavage s of every arrow f out of A.
template <FiniteCategory C>
CheckResult check_identity_cleavages(const Awfs<C>& w, const Universe<C>& u) {
  const auto& cat = w.category();
  CheckResult c{"cloven.identity", true, "", {}, {}};
  for (const auto& a : u.objects) {
    const auto id = cat.identity(a);
    const auto all = enumerate_left_cleavages(w, id);
    ++c.counts["objects"];
    if (all.size() != 1 || !(all.front().s == identity_cleavage(w, a).s)) {
      c.fail(cat.describe(a) + ": " + std::to_string(all.size()) + " cleavages on the identity");
    }
  }
  for (const auto& f : u.arrows) {
    const auto id = cat.identity(f.dom());
    const auto lhs = cat.compose(w.e_on_square(id, f, id, f), w.L(id));
    for (const auto& cl : enumerate_left_cleavages(w, f)) {
      ++c.counts["cloven_pairs"];
      if (!(lhs == cat.compose(cl.s, f))) c.fail(cat.describe(f) + " with s = " + cat.describe(cl.s));
    }
  }
  c.summary = "unique identity cleavage on " + std::to_string(c.counts["objects"]) + " objects; square lift on " +
              std::to_string(c.counts["cloven_pairs"]) + " cloven maps";
  return c;
}

/// Every cleavage found is a cleavage, and no arrow from the initial object is
/// in ExistsL by search unless the structural predicate says so.
template <FiniteCategory C>
CheckResult check_cofibrant_objects(const Awfs<C>& w, const std::vector<typename C::Object>& objects) {
  const auto& cat = w.category();
  CheckResult c{"l_class.cofibrant_objects", true, "", {}, {}};
  for (const auto& x : objects) {
    const auto f = initial_map(cat, x);
    const bool search = exists_l_membership_by_search(w, f);
    const auto fast = free_object_fast_path(cat, x);
    ++c.counts["objects"];
    if (search) ++c.counts["cofibrant"];
    if (fast && *fast != search) c.fail(cat.describe(x) + ": structural " + std::to_string(*fast) + ", search " + std::to_string(search));
  }
  c.summary = std::to_string(c.counts["cofibrant"]) + " of " + std::to_string(c.counts["objects"]) +
              " objects carry a coalgebra; structural predicate agrees";
  return c;
}

template <class C>
struct ClovenMap {
  std::size_t arrow;
  LeftCleavage<C> c;
};

template <FiniteCategory C>
std::vector<ClovenMap<C>> all_cloven_maps(const Awfs<C>& w, const Universe<C>& u) {
  std::vector<ClovenMap<C>> out;
  for (std::size_t n = 0; n < u.arrows.size(); ++n) {
    for (auto& cl : enumerate_left_cleavages(w, u.arrows[n])) out.push_back({n, std::move(cl)});
  }
  return out;
}

/// Composition of cloven maps: validity, unit laws, associativity, extension along a
/// cloven map and interchange with cloven morphisms.
template <FiniteCategory C>
std::vector<CheckResult> check_cloven_calculus(const Awfs<C>& w, const Universe<C>& u) {
  const auto& cat = w.category();
  const auto cloven = all_cloven_maps(w, u);
  CheckResult valid{"cloven.composite_valid", true, "", {}, {}};
  CheckResult unit{"cloven.unit", true, "", {}, {}};
  CheckResult assoc{"cloven.associativity", true, "", {}, {}};
  CheckResult extend{"cloven.extension", true, "", {}, {}};
  CheckResult inter{"cloven.interchange", true, "", {}, {}};

  auto composable = [&](const ClovenMap<C>& a, const ClovenMap<C>& b) { return a.c.f.cod() == b.c.f.dom(); };
  auto text = [&](const ClovenMap<C>& a) { return cat.describe(a.c.f) + " / " + cat.describe(a.c.s); };

  for (const auto& a : cloven) {
    const auto left = compose_cloven(w, identity_cleavage(w, a.c.f.dom()), a.c);
    const auto right = compose_cloven(w, a.c, identity_cleavage(w, a.c.f.cod()));
    ++unit.counts["checked"];
    if (!(left.s == a.c.s) || !(left.f == a.c.f)) unit.fail("left unit at " + text(a));
    if (!(right.s == a.c.s) || !(right.f == a.c.f)) unit.fail("right unit at " + text(a));
  }

  // composites of every composable pair, reused below
  std::vector<std::vector<std::pair<std::size_t, LeftCleavage<C>>>> composite(cloven.size());
  for (std::size_t x = 0; x < cloven.size(); ++x) {
    for (std::size_t y = 0; y < cloven.size(); ++y) {
      if (!composable(cloven[x], cloven[y])) continue;
      auto gf = compose_cloven(w, cloven[x].c, cloven[y].c);
      ++valid.counts["checked"];
      if (!is_left_cleavage(w, gf)) valid.fail(text(cloven[x]) + " then " + text(cloven[y]));
      composite[x].push_back({y, std::move(gf)});
    }
  }
  for (std::size_t x = 0; x < cloven.size(); ++x) {
    for (const auto& [y, xy] : composite[x]) {
      for (const auto& [z, yz] : composite[y]) {
        ++assoc.counts["checked"];
        const auto lhs = compose_cloven(w, xy, cloven[z].c);
        const auto rhs = compose_cloven(w, cloven[x].c, yz);
        if (!(lhs.s == rhs.s)) assoc.fail(text(cloven[x]) + " ; " + text(cloven[y]) + " ; " + text(cloven[z]));
      }
    }
  }

  for (const auto& a : cloven) {
    for (const auto& g : u.arrows) {
      if (!(a.c.f.cod() == g.dom()) || !find_cleavage_left(w, g)) continue;
      ++extend.counts["checked"];
      const auto t = extend_cleavage(w, a.c, g);
      if (!is_left_cleavage(w, t)) extend.fail(text(a) + " along " + cat.describe(g) + ": not a cleavage");
      const SquareOf<C> sq{a.c.f, t.f, cat.identity(a.c.f.dom()), g};
      if (!is_cloven_morphism(w, sq, a.c, t)) extend.fail(text(a) + " along " + cat.describe(g) + ": (1, g) not cloven");
    }
  }

  // cloven morphisms between every pair of cloven maps
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<typename C::Morphism, typename C::Morphism>>> moves;
  for (std::size_t x = 0; x < cloven.size(); ++x) {
    for (std::size_t y = 0; y < cloven.size(); ++y) {
      const auto& f = cloven[x].c.f;
      const auto& g = cloven[y].c.f;
      for (const auto& h : cat.enumerate_homs(f.dom(), g.dom())) {
        const auto gh = cat.compose(g, h);
        for (const auto& k : cat.enumerate_homs(f.cod(), g.cod())) {
          if (!(gh == cat.compose(k, f))) continue;
          if (is_cloven_morphism(w, {f, g, h, k}, cloven[x].c, cloven[y].c)) moves[{x, y}].push_back({h, k});
        }
      }
    }
  }
  for (std::size_t x = 0; x < cloven.size(); ++x) {
    for (const auto& [y, xy] : composite[x]) {
      for (std::size_t x2 = 0; x2 < cloven.size(); ++x2) {
        auto first = moves.find({x, x2});
        if (first == moves.end()) continue;
        for (const auto& [y2, xy2] : composite[x2]) {
          auto second = moves.find({y, y2});
          if (second == moves.end()) continue;
          for (const auto& [h, k] : first->second) {
            for (const auto& [k2, l] : second->second) {
              if (!(k == k2)) continue;
              ++inter.counts["checked"];
              if (!is_cloven_morphism(w, {xy.f, xy2.f, h, l}, xy, xy2)) {
                inter.fail(text(cloven[x]) + " ; " + text(cloven[y]) + " via " + cat.describe(h) + ", " + cat.describe(l));
              }
            }
          }
        }
      }
    }
  }

  const auto n = std::to_string(cloven.size());
  valid.summary = std::to_string(valid.counts["checked"]) + " composites of " + n + " cloven maps are cleavages";
  unit.summary = "identity cleavage is a two-sided unit on " + n + " cloven maps";
  assoc.summary = std::to_string(assoc.counts["checked"]) + " composable triples associate";
  extend.summary = std::to_string(extend.counts["checked"]) + " extensions are cleavages with (1, g) cloven";
  inter.summary = std::to_string(inter.counts["checked"]) + " stacked cloven squares compose";
  return {valid, unit, assoc, extend, inter};
}

/// Lifts built from cleavages satisfy both triangles; fillers found by search
/// agree in existence, and absences survive reversed enumeration.
template <FiniteCategory C>
std::vector<CheckResult> check_lift_oracles(const Awfs<C>& w, const Universe<C>& u) {
  const auto& cat = w.category();
  const C reversed = cat.with_options({SearchOrder::reverse, cat.options().cap});
  CheckResult lift{"oracle.lift_via_cleavage", true, "", {}, {}};
  CheckResult order{"oracle.filler_order", true, "", {}, {}};

  std::vector<LeftCleavage<C>> lefts;
  std::vector<RightCleavage<C>> rights;
  for (const auto& f : u.arrows) {
    if (auto c = find_cleavage_left(w, f)) lefts.push_back(*c);
    if (auto r = find_cleavage_right(w, f)) rights.push_back(*r);
  }
  for (const auto& c : lefts) {
    for (const auto& r : rights) {
      for (const auto& h : cat.enumerate_homs(c.f.dom(), r.g.dom())) {
        const auto gh = cat.compose(r.g, h);
        for (const auto& k : cat.enumerate_homs(c.f.cod(), r.g.cod())) {
          if (!(gh == cat.compose(k, c.f))) continue;
          ++lift.counts["squares"];
          try {
            lift_via_cleavage(w, c, r, {c.f, r.g, h, k});
          } catch (const InvalidStructure&) {
            lift.fail(cat.describe(c.f) + " against " + cat.describe(r.g));
          }
          if (!find_filler(cat, SquareOf<C>{c.f, r.g, h, k})) lift.fail("search finds no filler where a cleavage lifts");
        }
      }
    }
  }
  for_each_square(cat, u, [&](const auto& f, const auto& g, const auto& h, const auto& k) {
    ++order.counts["squares"];
    const auto fwd = find_filler(cat, SquareOf<C>{f, g, h, k});
    const auto rev = find_filler(reversed, SquareOf<C>{f, g, h, k});
    if (fwd.has_value() != rev.has_value()) order.fail(cat.describe(f) + " against " + cat.describe(g));
    if (!fwd) ++order.counts["unfillable"];
  });
  lift.summary = std::to_string(lift.counts["squares"]) + " lifts satisfy both triangles";
  order.summary = std::to_string(order.counts["unfillable"]) + " of " + std::to_string(order.counts["squares"]) +
                  " squares unfillable in both orders";
  return {lift, order};
}

/// Retr is extensive, monotone and idempotent relative to the universe.
template <FiniteCategory C>
CheckResult check_retract_closure(const C& cat, const Universe<C>& u, const std::vector<ClassSpec<C>>& chain) {
  CheckResult c{"oracle.retract_closure", true, "", {}, {}};
  std::vector<std::vector<char>> closed;
  for (const auto& s : chain) {
    const auto r = retract_closure(cat, s, u);
    std::vector<char> in_s, in_r;
    for (const auto& f : u.arrows) {
      in_s.push_back(s.contains(f));
      in_r.push_back(r.contains(f));
    }
    // Retr(Retr S) with Retr S materialized as a class
    std::vector<typename C::Morphism> members;
    for (std::size_t n = 0; n < u.arrows.size(); ++n) {
      if (in_r[n]) members.push_back(u.arrows[n]);
    }
    const ClassSpec<C> r_spec{r.name, [members](const typename C::Morphism& f) {
                                return std::find(members.begin(), members.end(), f) != members.end();
                              }, "search"};
    const auto rr = retract_closure(cat, r_spec, u);
    for (std::size_t n = 0; n < u.arrows.size(); ++n) {
      ++c.counts["checked"];
      if (in_s[n] && !in_r[n]) c.fail(s.name + " not extensive at " + cat.describe(u.arrows[n]));
      if (rr.contains(u.arrows[n]) != static_cast<bool>(in_r[n])) c.fail(s.name + " not idempotent at " + cat.describe(u.arrows[n]));
    }
    closed.push_back(in_r);
  }
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    for (std::size_t n = 0; n < u.arrows.size(); ++n) {
      if (closed[k][n] && !closed[k + 1][n]) c.fail("not monotone at " + cat.describe(u.arrows[n]));
    }
  }
  c.summary = std::to_string(chain.size()) + " nested classes over " + std::to_string(u.arrows.size()) +
              " arrows: Retr extensive, monotone, idempotent";
  return c;
}

}  // namespace wfs
