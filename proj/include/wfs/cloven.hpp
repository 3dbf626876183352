#pragma once

// Cloven L-maps and R-maps: a map with a chosen lift against its own right
// (resp. left) factor.

#include <optional>
#include <vector>

#include "wfs/awfs.hpp"

namespace wfs {

template <class C>
struct LeftCleavage {
  typename C::Morphism f;  // A -> B
  typename C::Morphism s;  // B -> Ef
};

template <class C>
struct RightCleavage {
  typename C::Morphism g;  // C -> D
  typename C::Morphism p;  // Eg -> C
};

template <FiniteCategory C>
ProblemOf<C> left_cleavage_problem(const Awfs<C>& w, const typename C::Morphism& f) {
  const auto& cat = w.category();
  const auto t = w.factorize(f);
  return {f.cod(), t.E, {{f, t.L}}, {{t.R, cat.identity(f.cod())}}};
}

template <FiniteCategory C>
ProblemOf<C> right_cleavage_problem(const Awfs<C>& w, const typename C::Morphism& g) {
  const auto& cat = w.category();
  const auto t = w.factorize(g);
  return {t.E, g.dom(), {{t.L, cat.identity(g.dom())}}, {{g, t.R}}};
}

template <FiniteCategory C>
bool is_left_cleavage(const Awfs<C>& w, const LeftCleavage<C>& c) {
  const auto& cat = w.category();
  const auto t = w.factorize(c.f);
  return cat.compose(c.s, c.f) == t.L && cat.compose(t.R, c.s) == cat.identity(c.f.cod());
}

template <FiniteCategory C>
bool is_right_cleavage(const Awfs<C>& w, const RightCleavage<C>& c) {
  const auto& cat = w.category();
  const auto t = w.factorize(c.g);
  return cat.compose(c.p, t.L) == cat.identity(c.g.dom()) && cat.compose(c.g, c.p) == t.R;
}

template <FiniteCategory C>
std::optional<LeftCleavage<C>> find_cleavage_left(const Awfs<C>& w, const typename C::Morphism& f) {
  auto s = first_solution(w.category(), left_cleavage_problem(w, f));
  if (!s) return std::nullopt;
  LeftCleavage<C> c{f, *s};
  if (!is_left_cleavage(w, c)) throw InvalidStructure("cleavage search returned a non-cleavage");
  return c;
}

template <FiniteCategory C>
std::optional<RightCleavage<C>> find_cleavage_right(const Awfs<C>& w, const typename C::Morphism& g) {
  auto p = first_solution(w.category(), right_cleavage_problem(w, g));
  if (!p) return std::nullopt;
  RightCleavage<C> c{g, *p};
  if (!is_right_cleavage(w, c)) throw InvalidStructure("cleavage search returned a non-cleavage");
  return c;
}

template <FiniteCategory C>
std::vector<LeftCleavage<C>> enumerate_left_cleavages(const Awfs<C>& w, const typename C::Morphism& f) {
  std::vector<LeftCleavage<C>> out;
  w.category().for_each_solution(left_cleavage_problem(w, f), [&](const typename C::Morphism& s) {
    out.push_back({f, s});
    return true;
  });
  return out;
}

template <FiniteCategory C>
std::vector<RightCleavage<C>> enumerate_right_cleavages(const Awfs<C>& w, const typename C::Morphism& g) {
  std::vector<RightCleavage<C>> out;
  w.category().for_each_solution(right_cleavage_problem(w, g), [&](const typename C::Morphism& p) {
    out.push_back({g, p});
    return true;
  });
  return out;
}

/// δ_f∘s = E(1_A, s)∘s.
template <FiniteCategory C>
bool is_l_coalgebra(const Awfs<C>& w, const LeftCleavage<C>& c, const std::optional<typename C::Morphism>& delta = {}) {
  const auto& cat = w.category();
  const auto d = delta ? *delta : w.delta(c.f);
  const auto e = w.e_on_square(c.f, w.L(c.f), cat.identity(c.f.dom()), c.s);
  return cat.compose(d, c.s) == cat.compose(e, c.s);
}

/// p∘μ_g = p∘E(p, 1_D).
template <FiniteCategory C>
bool is_r_algebra(const Awfs<C>& w, const RightCleavage<C>& c) {
  const auto& cat = w.category();
  const auto e = w.e_on_square(w.R(c.g), c.g, c.p, cat.identity(c.g.cod()));
  return cat.compose(c.p, w.mu(c.g)) == cat.compose(c.p, e);
}

/// E(h, k)∘s1 = s2∘k for a square (h, k): c1.f -> c2.f.
template <FiniteCategory C>
bool is_cloven_morphism(const Awfs<C>& w, const SquareOf<C>& sq, const LeftCleavage<C>& c1,
                        const LeftCleavage<C>& c2) {
  const auto& cat = w.category();
  if (!(sq.f == c1.f) || !(sq.g == c2.f)) throw BoundaryMismatch("square does not run between the cleaved maps");
  const auto e = w.e_on_square(sq);
  return cat.compose(e, c1.s) == cat.compose(c2.s, sq.k);
}

/// p∘E(h, k)∘s for a square (h, k): c.f -> r.g; both triangles are checked.
template <FiniteCategory C>
typename C::Morphism lift_via_cleavage(const Awfs<C>& w, const LeftCleavage<C>& c, const RightCleavage<C>& r,
                                       const SquareOf<C>& sq) {
  const auto& cat = w.category();
  if (!(sq.f == c.f) || !(sq.g == r.g)) throw BoundaryMismatch("square does not run between the cleaved maps");
  const auto d = cat.compose(r.p, cat.compose(w.e_on_square(sq), c.s));
  if (!(cat.compose(d, sq.f) == sq.h) || !(cat.compose(sq.g, d) == sq.k)) {
    throw InvalidStructure("lift violates a triangle identity");
  }
  return d;
}

/// The cleavage on g∘f obtained by lifting (L(gf), 1) through f and then g
/// against the free R-algebra (R(gf), μ_gf).
template <FiniteCategory C>
LeftCleavage<C> compose_cloven(const Awfs<C>& w, const LeftCleavage<C>& c1, const LeftCleavage<C>& c2) {
  const auto& cat = w.category();
  if (!(c1.f.cod() == c2.f.dom())) throw BoundaryMismatch("compose_cloven: maps are not composable");
  const auto gf = cat.compose(c2.f, c1.f);
  const auto t = w.factorize(gf);
  const RightCleavage<C> free_alg{t.R, w.mu(gf)};
  const auto phi = lift_via_cleavage(w, c1, free_alg, {c1.f, t.R, t.L, c2.f});
  const auto u = lift_via_cleavage(w, c2, free_alg, {c2.f, t.R, phi, cat.identity(c2.f.cod())});
  return {gf, u};
}

/// A cleavage t on g∘f with t∘g = E(1, g)∘s and R(gf)∘t = 1, found by search.
/// Throws NotAnLMap when g has no cleavage.
template <FiniteCategory C>
LeftCleavage<C> extend_cleavage(const Awfs<C>& w, const LeftCleavage<C>& c, const typename C::Morphism& g) {
  const auto& cat = w.category();
  if (!(c.f.cod() == g.dom())) throw BoundaryMismatch("extend_cleavage: maps are not composable");
  if (!find_cleavage_left(w, g)) throw NotAnLMap(cat.describe(g) + " admits no cleavage");
  const auto gf = cat.compose(g, c.f);
  const auto t = w.factorize(gf);
  const auto top = cat.compose(w.e_on_square(c.f, gf, cat.identity(c.f.dom()), g), c.s);
  ProblemOf<C> problem{g.cod(), t.E, {{g, top}}, {{t.R, cat.identity(g.cod())}}};
  auto found = first_solution(cat, problem);
  if (!found) throw NotAnLMap("no cleavage extends along " + cat.describe(g));
  return {gf, *found};
}

template <FiniteCategory C>
LeftCleavage<C> identity_cleavage(const Awfs<C>& w, const typename C::Object& a) {
  const auto id = w.category().identity(a);
  return {id, w.L(id)};
}

}  // namespace wfs
