#include <doctest.h>

#include <numeric>
#include <set>

#include "wfs/analysis.hpp"
#include "wfs/functor.hpp"

using namespace wfs;

namespace {

std::uint64_t gcd_count(const ModObject& a, const ModObject& b) {
  std::uint64_t n = 1;
  for (int d : a.factors()) {
    for (int e : b.factors()) n *= static_cast<std::uint64_t>(std::gcd(d, e));
  }
  return n;
}

/// Elements of N killed by d, counted from residues.
Index killed_by(const Mod& m, const ModObject& n, int d) {
  Index count = 0;
  const auto size = *m.cardinality(n);
  const auto f = n.factors();
  for (Index i = 0; i < size; ++i) {
    const auto r = m.residues_of(n, m.element_at(n, i));
    bool ok = true;
    for (std::size_t c = 0; c < f.size(); ++c) ok = ok && (d * r[c]) % f[c] == 0;
    if (ok) ++count;
  }
  return count;
}

std::vector<Index> add(const std::vector<Index>& x, const std::vector<Index>& y, const std::vector<int>& f) {
  std::vector<Index> z(x.size());
  for (std::size_t c = 0; c < x.size(); ++c) z[c] = (x[c] + y[c]) % f[c];
  return z;
}

/// Brute-force count of equivariant functions X -> Y.
std::size_t equivariant_functions(const MSetObject& x, const MSetObject& y) {
  std::size_t count = 0;
  std::vector<int> t(static_cast<std::size_t>(x.size()), 0);
  if (y.size() == 0) return x.size() == 0 ? 1 : 0;
  while (true) {
    bool ok = true;
    for (std::size_t m = 0; m < x.act.size() && ok; ++m) {
      for (int a = 0; a < x.size() && ok; ++a) ok = t[x.act[m][a]] == y.act[m][t[a]];
    }
    if (ok) ++count;
    int c = 0;
    while (c < x.size() && t[c] == y.size() - 1) t[c++] = 0;
    if (c == x.size()) break;
    ++t[c];
  }
  return count;
}

bool isomorphic_to_free(const MSet& ms, const MSetObject& x) {
  const int order = ms.monoid().order();
  if (x.size() % order != 0) return false;
  for (const auto& f : ms.enumerate_homs(ms.free_on(x.size() / order), x)) {
    if (ms.is_mono(f) && ms.is_epi(f)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("squarefree moduli only") {
  CHECK_THROWS_AS(Mod(4), UnsupportedRing);
  CHECK_THROWS_AS(Mod(12), UnsupportedRing);
  CHECK_THROWS_AS(Mod(1), UnsupportedRing);
  const Mod m30(30);
  CHECK(m30.primes() == std::vector<Residue>{2, 3, 5});
  CHECK(m30.enumerate_homs(m30.module({30}), m30.module({30})).size() == 30);
}

TEST_CASE("modules up to 36 elements are the factor multisets over 2, 3, 6") {
  const Mod m;
  // multisets {2^a, 3^b, 6^c} with 2^a 3^b 6^c <= 36
  std::size_t expected = 0;
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (int c = 0; c <= 2; ++c) {
        if ((1 << a) * (b == 0 ? 1 : b == 1 ? 3 : b == 2 ? 9 : 27) * (c == 0 ? 1 : c == 1 ? 6 : 36) <= 36) ++expected;
      }
    }
  }
  const auto mods = m.modules_up_to(36);
  CHECK(mods.size() == expected);
  CHECK(std::set<ModObject>(mods.begin(), mods.end()).size() == mods.size());
  for (const auto& x : mods) CHECK(*m.cardinality(x) <= 36);
}

TEST_CASE("element numbering round-trips through residues") {
  const Mod m;
  for (const auto& x : m.modules_up_to(24)) {
    const auto f = x.factors();
    for (Index i = 0; i < *m.cardinality(x); ++i) {
      const auto r = m.residues_of(x, m.element_at(x, i));
      // mixed radix, last coordinate least significant
      Index j = 0;
      for (std::size_t c = 0; c < f.size(); ++c) j = j * f[c] + r[c];
      CHECK(j == i);
      CHECK(m.index_of(x, m.element_from_residues(x, r)) == i);
    }
  }
}

TEST_CASE("hom counts are products of gcds") {
  const Mod m;
  const auto mods = m.modules_up_to(36);
  for (const auto& a : mods) {
    for (const auto& b : mods) {
      const auto expected = gcd_count(a, b);
      CHECK(m.hom_count(a, b) == expected);
      if (expected <= 1296) CHECK(m.enumerate_homs(a, b).size() == expected);
    }
  }
}

TEST_CASE("hom counts agree with generator images counted elementwise") {
  const Mod m;
  const auto mods = m.modules_up_to(12);
  for (const auto& a : mods) {
    for (const auto& b : mods) {
      std::uint64_t expected = 1;
      for (int d : a.factors()) expected *= static_cast<std::uint64_t>(killed_by(m, b, d));
      CHECK(m.enumerate_homs(a, b).size() == expected);
    }
  }
}

TEST_CASE("enumerated homs are additive and distinct") {
  const Mod m;
  const auto mods = m.modules_up_to(6);
  for (const auto& a : mods) {
    for (const auto& b : mods) {
      const auto homs = m.enumerate_homs(a, b);
      std::set<std::vector<std::vector<Index>>> seen;
      for (const auto& f : homs) {
        seen.insert(m.to_matrix(f));
        CHECK(m.from_matrix(a, b, m.to_matrix(f)) == f);
        const auto fa = a.factors(), fb = b.factors();
        for (Index x = 0; x < *m.cardinality(a); ++x) {
          for (Index y = 0; y < *m.cardinality(a); ++y) {
            const auto rx = m.residues_of(a, m.element_at(a, x));
            const auto ry = m.residues_of(a, m.element_at(a, y));
            const auto lhs = m.residues_of(b, m.apply(f, m.element_from_residues(a, add(rx, ry, fa))));
            const auto fx = m.residues_of(b, m.apply(f, m.element_at(a, x)));
            const auto fy = m.residues_of(b, m.apply(f, m.element_at(a, y)));
            CHECK(lhs == add(fx, fy, fb));
          }
        }
      }
      CHECK(seen.size() == homs.size());
    }
  }
}

TEST_CASE("module examples") {
  const Mod m;
  const auto z2 = m.module({2}), z3 = m.module({3}), z6 = m.module({6});
  const auto red = m.from_matrix(z6, z2, {{1}});
  const auto three = m.from_matrix(z2, z6, {{3}});
  CHECK(m.compose(red, three) == m.identity(z2));
  CHECK(m.to_matrix(m.identity(z6)) == std::vector<std::vector<Index>>{{1}});
  CHECK(m.enumerate_homs(z6, z6).size() == 6);
  const auto zero23 = m.enumerate_homs(z2, z3);
  REQUIRE(zero23.size() == 1);
  CHECK(zero23.front() == m.zero(z2, z3));
  CHECK_FALSE(m.is_epi(zero23.front()));
  CHECK(m.is_mono(initial_map(m, z6)));
  CHECK(m.enumerate_homs(m.initial(), m.initial()).size() == 1);
  CHECK_THROWS_AS(m.from_matrix(z2, z6, {{1}}), InvalidStructure);

  const auto cp = m.coproduct(z2, z3);
  CHECK(cp.object == m.module({2, 3}));
  const auto cz = m.coproduct(m.initial(), z6);
  CHECK(cz.object == z6);
  CHECK(cz.inj2 == m.identity(z6));

  CHECK(cokernel(m, m.identity(z6)) == m.initial());
  CHECK(cokernel(m, initial_map(m, z6)) == z6);
  CHECK(cokernel(m, m.from_matrix(z6, z6, {{2}})) == z2);

  CHECK(is_free_module(m, z6));
  CHECK_FALSE(is_free_module(m, z2));
  CHECK(is_free_module(m, m.module({2, 3})));
  for (const auto& x : {z2, z3, z6}) CHECK(is_projective_module(m, x));
}

TEST_CASE("freeness: dimension rule agrees with isomorphism search") {
  const Mod m;
  for (const auto& x : m.modules_up_to(36)) CHECK(is_free_module(m, x) == is_free_module_by_search(m, x));
}

TEST_CASE("free-forgetful comonad on modules") {
  const Mod m;
  const auto z2 = m.module({2});
  CHECK(m.free_object(z2) == m.free_module(2));
  CHECK(m.free_object(m.initial()) == m.free_module(1));
  CHECK(m.is_epi(m.counit(z2)));
  // counit sends the basis vector of an element to that element
  const auto py = m.free_object(m.module({3}));
  for (Index y = 0; y < 3; ++y) {
    std::vector<Index> basis(3, 0);
    basis[static_cast<std::size_t>(y)] = 1;
    const auto image = m.apply(m.counit(m.module({3})), m.element_from_residues(py, basis));
    CHECK(m.index_of(m.module({3}), image) == y);
  }
  const auto u = full_universe(m, m.modules_up_to(3));
  const auto report = check_comonad_laws(m, free_forgetful_comonad(m), u);
  CHECK(report.count(LawStatus::fail) == 0);
  // P^3 of a nonzero module is free on more than 2^63 generators
  for (const auto& r : report.results) {
    if (r.status == LawStatus::skipped) CHECK(r.law == "comonad_p.coassociativity");
  }
  CHECK(report.count(LawStatus::skipped) == 2);
}

TEST_CASE("tensoring with Z/2 keeps the 2-part") {
  const Mod m;
  const auto v = tensor_z2(m);
  CHECK(v.object(m.module({6})) == m.module({2}));
  CHECK(v.object(m.module({3})) == m.initial());
  CHECK(v.object(m.module({2, 3})) == m.module({2}));
  // |Z/2 ⊗ M| = |M / 2M|, with 2M computed elementwise
  for (const auto& x : m.modules_up_to(36)) {
    std::set<Index> doubled;
    for (Index i = 0; i < *m.cardinality(x); ++i) {
      auto r = m.residues_of(x, m.element_at(x, i));
      const auto f = x.factors();
      for (std::size_t c = 0; c < r.size(); ++c) r[c] = (2 * r[c]) % f[c];
      doubled.insert(m.index_of(x, m.element_from_residues(x, r)));
    }
    CHECK(*m.cardinality(v.object(x)) * static_cast<Index>(doubled.size()) == *m.cardinality(x));
  }
  // functoriality
  const auto u = full_universe(m, m.modules_up_to(12));
  for (const auto& f : u.arrows) {
    CHECK(v.morphism(m.identity(f.dom())) == m.identity(v.object(f.dom())));
    for (const auto& g : u.arrows) {
      if (!(f.cod() == g.dom())) continue;
      CHECK(v.morphism(m.compose(g, f)) == m.compose(v.morphism(g), v.morphism(f)));
    }
  }
  CHECK_THROWS_AS(tensor_z2(Mod(30)), UnsupportedRing);
  CHECK_THROWS_AS(v.object(Mod(30).module({5})), DomainMismatch);
}

TEST_CASE("M-set objects: idempotent maps, counted") {
  const MSet ms;
  // labelled idempotent self-maps of an n-set: sum_k C(n,k) k^(n-k)
  const std::vector<std::size_t> cumulative{1, 2, 5, 15, 56};
  for (int n = 0; n <= 4; ++n) CHECK(ms.objects_up_to(n).size() == cumulative[static_cast<std::size_t>(n)]);
  CHECK(finset().objects_up_to(3).size() == 4);
}

TEST_CASE("M-set hom-sets match brute-force equivariance") {
  const MSet ms;
  const auto objs = ms.objects_up_to(3);
  for (const auto& a : objs) {
    for (const auto& b : objs) {
      const auto homs = ms.enumerate_homs(a, b);
      CHECK(homs.size() == equivariant_functions(a, b));
      for (std::size_t k = 1; k < homs.size(); ++k) CHECK(homs[k - 1].table() < homs[k].table());
      for (const auto& f : homs) {
        std::set<int> image(f.table().begin(), f.table().end());
        CHECK(ms.is_mono(f) == (static_cast<int>(image.size()) == a.size()));
        CHECK(ms.is_epi(f) == (static_cast<int>(image.size()) == b.size()));
      }
    }
  }
  const auto homs = ms.enumerate_homs(ms.regular(), ms.regular());
  REQUIRE(homs.size() == 2);
  CHECK(homs[0].table() == std::vector<int>{0, 1});
  CHECK(homs[1].table() == std::vector<int>{1, 1});
}

TEST_CASE("M-set structure and validation") {
  const MSet ms;
  CHECK(ms.identity(ms.regular()).table() == std::vector<int>{0, 1});
  const auto cp = ms.coproduct(ms.trivial_action(1), ms.object(2, {{1, 1}}));
  CHECK(cp.object.size() == 3);
  CHECK(cp.inj2.table() == std::vector<int>{1, 2});
  CHECK_THROWS_AS(ms.object(2, {{1, 0}}), InvalidStructure);  // e·e ≠ e
  CHECK_THROWS_AS(ms.morphism(ms.regular(), ms.trivial_action(2), {0, 1}), InvalidStructure);
  MonoidDef bad{{"1", "a", "b"}, {{0, 1, 2}, {1, 2, 0}, {2, 2, 2}}};
  CHECK_THROWS_AS(bad.validate(), InvalidStructure);
  CHECK_NOTHROW(MonoidDef::idempotent().validate());
}

TEST_CASE("free M-sets and the free-forgetful comonad") {
  const MSet ms;
  const auto t = ms.trivial_action(1);
  CHECK(ms.free_object(t) == ms.regular());
  CHECK(ms.free_object(t).size() == 2);
  const auto y = ms.object(2, {{1, 1}});
  const auto py = ms.free_object(y);
  for (int m = 0; m < 2; ++m) {
    for (int e = 0; e < 2; ++e) {
      const int pair = m * 2 + e;
      CHECK(ms.counit(y)(pair) == y.act[m][e]);
      CHECK(ms.comult(y)(pair) == m * py.size() + e);
    }
  }
  CHECK(is_free_mset(ms, ms.regular()));
  CHECK_FALSE(is_free_mset(ms, t));
  CHECK(is_free_mset(ms, ms.initial()));
  CHECK_FALSE(is_free_mset(ms, ms.trivial_action(2)));
  for (const auto& x : ms.objects_up_to(4)) CHECK(is_free_mset(ms, x) == isomorphic_to_free(ms, x));
  const auto u = full_universe(ms, ms.objects_up_to(2));
  CHECK(check_comonad_laws(ms, free_forgetful_comonad(ms), u).passed());
}

TEST_CASE("trivial action functor") {
  const MSet sets = finset();
  const MSet ms;
  const auto v = trivial_action(sets, ms);
  CHECK(v.object(sets.initial()) == ms.initial());
  CHECK(v.object(sets.trivial_action(1)) == ms.trivial_action(1));
  const auto two = v.object(sets.trivial_action(2));
  CHECK(two.act[1] == std::vector<int>{0, 1});
  CHECK_FALSE(is_free_mset(ms, two));
  for (const auto& f : sets.enumerate_homs(sets.trivial_action(2), sets.trivial_action(3))) {
    CHECK(v.morphism(f).table() == f.table());
  }
  CHECK_THROWS_AS(trivial_action(ms, ms), UnsupportedCategory);
  CHECK_THROWS_AS(v.object(ms.regular()), DomainMismatch);
}

TEST_CASE("identity functor") {
  const Mod m;
  const auto v = identity_functor<Mod>();
  const auto f = m.from_matrix(m.module({6}), m.module({2}), {{1}});
  CHECK(apply_functor(v, f) == f);
  CHECK(apply_functor(v, m.module({6})) == m.module({6}));
}
