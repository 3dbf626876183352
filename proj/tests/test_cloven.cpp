#include <doctest.h>

#include "wfs/cloven.hpp"
#include "wfs/functor.hpp"

using namespace wfs;

namespace {

template <class C>
Awfs<C> make(const C& cat) {
  return Awfs<C>(cat, free_forgetful_comonad(cat));
}

template <class C>
std::vector<typename C::Morphism> brute_left(const Awfs<C>& w, const typename C::Morphism& f) {
  const auto& cat = w.category();
  const auto t = w.factorize(f);
  std::vector<typename C::Morphism> out;
  for (const auto& s : cat.enumerate_homs(f.cod(), t.E)) {
    if (cat.compose(s, f) == t.L && cat.compose(t.R, s) == cat.identity(f.cod())) out.push_back(s);
  }
  return out;
}

template <class C>
std::vector<typename C::Morphism> brute_right(const Awfs<C>& w, const typename C::Morphism& g) {
  const auto& cat = w.category();
  const auto t = w.factorize(g);
  std::vector<typename C::Morphism> out;
  for (const auto& p : cat.enumerate_homs(t.E, g.dom())) {
    if (cat.compose(p, t.L) == cat.identity(g.dom()) && cat.compose(g, p) == t.R) out.push_back(p);
  }
  return out;
}

template <class C>
void cleavages_match_brute_force(const C& cat, const std::vector<typename C::Object>& objs) {
  const auto w = make(cat);
  for (const auto& f : full_universe(cat, objs).arrows) {
    const auto expected = brute_left(w, f);
    const auto got = enumerate_left_cleavages(w, f);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].s == expected[i]);
    const auto first = find_cleavage_left(w, f);
    CHECK(first.has_value() == !expected.empty());
    if (first) CHECK(first->s == expected.front());

    const auto er = brute_right(w, f);
    const auto gr = enumerate_right_cleavages(w, f);
    REQUIRE(gr.size() == er.size());
    for (std::size_t i = 0; i < gr.size(); ++i) CHECK(gr[i].p == er[i]);
  }
}

}  // namespace

TEST_CASE("cleavage searches agree with brute force") {
  cleavages_match_brute_force(MSet(), MSet().objects_up_to(2));
  const Mod m;
  cleavages_match_brute_force(m, m.modules_up_to(3));
}

TEST_CASE("cloven maps are monos") {
  const MSet ms;
  const auto w = make(ms);
  std::size_t cloven = 0, monos = 0;
  for (const auto& f : full_universe(ms, ms.objects_up_to(3)).arrows) {
    const bool c = find_cleavage_left(w, f).has_value();
    if (c) CHECK(ms.is_mono(f));
    cloven += c;
    monos += ms.is_mono(f);
  }
  CHECK(cloven < monos);

  const Mod m;
  const auto wm = make(m);
  for (const auto& f : full_universe(m, m.modules_up_to(6)).arrows) {
    CHECK(find_cleavage_left(wm, f).has_value() == m.is_mono(f));
  }
}

TEST_CASE("a mono that admits no cleavage") {
  const MSet ms;
  const auto w = make(ms);
  // three points, e collapsing two of them onto the third
  const auto x = ms.object(3, {{2, 2, 2}});
  const auto f = initial_map(ms, x);
  CHECK(ms.is_mono(f));
  CHECK(brute_left(w, f).empty());
  CHECK_FALSE(find_cleavage_left(w, f).has_value());
}

TEST_CASE("the point under the empty set") {
  const MSet ms;
  const auto w = make(ms);
  const auto f = initial_map(ms, ms.trivial_action(1));
  const auto c = find_cleavage_left(w, f);
  REQUIRE(c.has_value());
  // the only fixed point of Ef = M is e
  CHECK(c->s.table() == std::vector<int>{1});
  CHECK(enumerate_left_cleavages(w, f).size() == 1);
  CHECK_FALSE(is_l_coalgebra(w, *c));

  const auto g = initial_map(ms, ms.regular());
  const auto cg = find_cleavage_left(w, g);
  REQUIRE(cg.has_value());
  CHECK(is_l_coalgebra(w, *cg));
}

TEST_CASE("free coalgebras and free algebras") {
  const MSet ms;
  const auto w = make(ms);
  for (const auto& f : full_universe(ms, ms.objects_up_to(2)).arrows) {
    const LeftCleavage<MSet> free_coalg{w.L(f), w.delta(f)};
    CHECK(is_left_cleavage(w, free_coalg));
    CHECK(is_l_coalgebra(w, free_coalg));
    const RightCleavage<MSet> free_alg{w.R(f), w.mu(f)};
    CHECK(is_right_cleavage(w, free_alg));
    CHECK(is_r_algebra(w, free_alg));
  }
}

TEST_CASE("lifting through cleavages") {
  const MSet ms;
  const auto w = make(ms);
  const auto u = full_universe(ms, ms.objects_up_to(2));
  // (Lf, 1) against the free algebra returns the cleavage itself
  for (const auto& f : u.arrows) {
    for (const auto& c : enumerate_left_cleavages(w, f)) {
      const auto t = w.factorize(f);
      const RightCleavage<MSet> free_alg{t.R, w.mu(f)};
      CHECK(lift_via_cleavage(w, c, free_alg, {f, t.R, t.L, ms.identity(f.cod())}) == c.s);
    }
  }
  std::size_t lifts = 0;
  for_each_square(ms, u, [&](const auto& f, const auto& g, const auto& h, const auto& k) {
    const auto c = find_cleavage_left(w, f);
    const auto r = find_cleavage_right(w, g);
    if (!c || !r) return;
    const auto d = lift_via_cleavage(w, *c, *r, {f, g, h, k});
    CHECK(ms.compose(d, f) == h);
    CHECK(ms.compose(g, d) == k);
    ++lifts;
  });
  CHECK(lifts > 0);
}

TEST_CASE("composing cleavages") {
  const MSet ms;
  const auto w = make(ms);
  const auto u = full_universe(ms, ms.objects_up_to(2));
  std::size_t pairs = 0;
  for (const auto& f : u.arrows) {
    const auto c1 = find_cleavage_left(w, f);
    if (!c1) continue;
    const auto id = identity_cleavage(w, f.dom());
    CHECK(is_left_cleavage(w, id));
    const auto unit = compose_cloven(w, id, *c1);
    CHECK(unit.f == f);
    CHECK(is_left_cleavage(w, unit));
    for (const auto& g : u.arrows) {
      if (!(g.dom() == f.cod())) continue;
      const auto c2 = find_cleavage_left(w, g);
      if (!c2) {
        CHECK_THROWS_AS(extend_cleavage(w, *c1, g), NotAnLMap);
        continue;
      }
      ++pairs;
      const auto gf = compose_cloven(w, *c1, *c2);
      CHECK(gf.f == ms.compose(g, f));
      CHECK(is_left_cleavage(w, gf));
      const auto ext = extend_cleavage(w, *c1, g);
      CHECK(is_left_cleavage(w, ext));
      CHECK(ms.compose(ext.s, g) == ms.compose(w.e_on_square(f, ext.f, ms.identity(f.dom()), g), c1->s));
    }
  }
  CHECK(pairs > 0);
  const auto a = initial_map(ms, ms.regular());
  const auto c = find_cleavage_left(w, a);
  REQUIRE(c.has_value());
  CHECK_THROWS_AS(compose_cloven(w, *c, *c), BoundaryMismatch);
}

TEST_CASE("cloven morphisms") {
  const MSet ms;
  const auto w = make(ms);
  const auto f = initial_map(ms, ms.regular());
  const auto c = find_cleavage_left(w, f);
  REQUIRE(c.has_value());
  CHECK(is_cloven_morphism(w, {f, f, ms.identity(f.dom()), ms.identity(f.cod())}, *c, *c));
  const auto g = initial_map(ms, ms.trivial_action(1));
  const auto cg = find_cleavage_left(w, g);
  REQUIRE(cg.has_value());
  CHECK_THROWS_AS(is_cloven_morphism(w, {f, f, ms.identity(f.dom()), ms.identity(f.cod())}, *c, *cg),
                  BoundaryMismatch);
}
