#pragma once

// Functors between the instance categories and the free-forgetful comonads.

#include <functional>
#include <string>

#include "wfs/category.hpp"
#include "wfs/mod.hpp"
#include "wfs/mset.hpp"

namespace wfs {

template <class C, class D>
struct FunctorDef {
  using Source = C;
  using Target = D;
  std::string name;
  std::function<typename D::Object(const typename C::Object&)> object;
  std::function<typename D::Morphism(const typename C::Morphism&)> morphism;
};

template <class C, class D>
typename D::Object apply_functor(const FunctorDef<C, D>& v, const typename C::Object& x) {
  return v.object(x);
}

template <class C, class D>
typename D::Morphism apply_functor(const FunctorDef<C, D>& v, const typename C::Morphism& f) {
  return v.morphism(f);
}

template <class C>
FunctorDef<C, C> identity_functor() {
  return {"identity", [](const typename C::Object& x) { return x; },
          [](const typename C::Morphism& f) { return f; }};
}

/// Z/q ⊗ (-) on Mod_{Z/n}.
inline FunctorDef<Mod, Mod> tensor_functor(const Mod& cat, Residue q) {
  tensor_prime(cat, cat.initial(), q);  // UnsupportedRing if q does not divide n
  auto check = [n = cat.modulus()](const ModObject& x) {
    if (x.n != n) throw DomainMismatch("module over Z/" + std::to_string(x.n) + " given to a Z/" + std::to_string(n) + " functor");
  };
  return {"tensor_z" + std::to_string(q),
          [cat, q, check](const ModObject& x) {
            check(x);
            return tensor_prime(cat, x, q);
          },
          [cat, q, check](const ModMorphism& f) {
            check(f.dom());
            check(f.cod());
            return tensor_prime(cat, f, q);
          }};
}

/// Z/2 ⊗_{Z/6} (-).
inline FunctorDef<Mod, Mod> tensor_z2(const Mod& cat) {
  if (cat.modulus() != 6) throw UnsupportedRing("tensor_z2 is defined on Mod over Z/6; use tensor_functor");
  return tensor_functor(cat, 2);
}

/// Sets to M-sets with every element fixed.
inline FunctorDef<MSet, MSet> trivial_action(const MSet& sets, const MSet& msets) {
  if (!sets.is_trivial_monoid()) throw UnsupportedCategory("trivial_action starts from FinSet");
  auto check = [](const MSetObject& x) {
    if (x.act.size() != 1) throw DomainMismatch("trivial_action applied to a non-set");
  };
  return {"trivial_action",
          [msets, check](const MSetObject& x) {
            check(x);
            return msets.trivial_action(x.size());
          },
          [msets, check](const MSetMorphism& f) {
            check(f.dom());
            return MSetMorphism(msets.trivial_action(f.dom().size()), msets.trivial_action(f.cod().size()), f.table());
          }};
}

/// P = F U with evaluation as counit.
inline Comonad<Mod> free_forgetful_comonad(const Mod& cat) {
  return {[cat](const ModObject& y) { return cat.free_object(y); },
          [cat](const ModMorphism& f) { return cat.free_map(f); },
          [cat](const ModObject& y) { return cat.counit(y); },
          [cat](const ModObject& y) { return cat.comult(y); }};
}

inline Comonad<MSet> free_forgetful_comonad(const MSet& cat) {
  return {[cat](const MSetObject& y) { return cat.free_object(y); },
          [cat](const MSetMorphism& f) { return cat.free_map(f); },
          [cat](const MSetObject& y) { return cat.counit(y); },
          [cat](const MSetObject& y) { return cat.comult(y); }};
}

template <class C>
Comonad<C> free_forgetful_comonad(const C&) {
  throw UnsupportedCategory("no free-forgetful comonad registered for this category");
}

}  // namespace wfs
