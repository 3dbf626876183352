#pragma once

// Lifting, retract and class-closure oracles over finite universes, and the
// comparison of Retr(V⁻¹∃𝕃) with V⁻¹(Retr ∃𝕃).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wfs/awfs.hpp"
#include "wfs/cloven.hpp"
#include "wfs/functor.hpp"
#include "wfs/mod.hpp"
#include "wfs/mset.hpp"
#include "wfs/vect.hpp"

namespace wfs {

template <class C>
struct ClassSpec {
  std::string name;
  std::function<bool(const typename C::Morphism&)> contains;
  std::string provenance = "search";  // "structural" or "search"
};

/// (i, j): f -> g and (r, q): g -> f with r∘i = 1 and q∘j = 1.
template <class C>
struct RetractWitness {
  typename C::Morphism i, j, r, q;
};

/// First d with d∘f = h and g∘d = k.
template <FiniteCategory C>
std::optional<typename C::Morphism> find_filler(const C& cat, const SquareOf<C>& sq) {
  require_commutes(cat, sq);
  ProblemOf<C> problem{sq.f.cod(), sq.g.dom(), {{sq.f, sq.h}}, {{sq.g, sq.k}}};
  auto d = first_solution(cat, problem);
  if (d && (!(cat.compose(*d, sq.f) == sq.h) || !(cat.compose(sq.g, *d) == sq.k))) {
    throw InvalidStructure("filler search returned a non-filler");
  }
  return d;
}

/// Every commuting square from f to a member of S in U has a filler.
template <FiniteCategory C>
bool has_llp(const C& cat, const typename C::Morphism& f, const ClassSpec<C>& s, const Universe<C>& u) {
  for (const auto& g : u.arrows) {
    if (!s.contains(g)) continue;
    for (const auto& h : cat.enumerate_homs(f.dom(), g.dom())) {
      const auto gh = cat.compose(g, h);
      for (const auto& k : cat.enumerate_homs(f.cod(), g.cod())) {
        if (!(gh == cat.compose(k, f))) continue;
        if (!find_filler(cat, SquareOf<C>{f, g, h, k})) return false;
      }
    }
  }
  return true;
}

/// Every commuting square from a member of S in U to g has a filler.
template <FiniteCategory C>
bool has_rlp(const C& cat, const typename C::Morphism& g, const ClassSpec<C>& s, const Universe<C>& u) {
  for (const auto& f : u.arrows) {
    if (!s.contains(f)) continue;
    for (const auto& h : cat.enumerate_homs(f.dom(), g.dom())) {
      const auto gh = cat.compose(g, h);
      for (const auto& k : cat.enumerate_homs(f.cod(), g.cod())) {
        if (!(gh == cat.compose(k, f))) continue;
        if (!find_filler(cat, SquareOf<C>{f, g, h, k})) return false;
      }
    }
  }
  return true;
}

template <FiniteCategory C>
bool is_retract_witness(const C& cat, const typename C::Morphism& f, const typename C::Morphism& g,
                        const RetractWitness<C>& w) {
  return cat.compose(g, w.i) == cat.compose(w.j, f) && cat.compose(f, w.r) == cat.compose(w.q, g) &&
         cat.compose(w.r, w.i) == cat.identity(f.dom()) && cat.compose(w.q, w.j) == cat.identity(f.cod());
}

/// Nested search in the order i, j, r, q; i and j must be monic.
template <FiniteCategory C>
std::optional<RetractWitness<C>> retract_search(const C& cat, const typename C::Morphism& f,
                                                const typename C::Morphism& g) {
  using M = typename C::Morphism;
  std::optional<RetractWitness<C>> found;
  const auto id_a = cat.identity(f.dom());
  const auto id_b = cat.identity(f.cod());
  cat.for_each_solution({f.dom(), g.dom(), {}, {}}, [&](const M& i) {
    if (!cat.is_mono(i)) return true;
    const auto gi = cat.compose(g, i);
    cat.for_each_solution({f.cod(), g.cod(), {{f, gi}}, {}}, [&](const M& j) {
      if (!cat.is_mono(j)) return true;
      cat.for_each_solution({g.dom(), f.dom(), {{i, id_a}}, {}}, [&](const M& r) {
        auto q = first_solution(cat, ProblemOf<C>{g.cod(), f.cod(), {{j, id_b}, {g, cat.compose(f, r)}}, {}});
        if (q) found = RetractWitness<C>{i, j, r, *q};
        return !found;
      });
      return !found;
    });
    return !found;
  });
  return found;
}

template <FiniteCategory C>
std::optional<RetractWitness<C>> is_retract_of(const C& cat, const typename C::Morphism& f,
                                               const typename C::Morphism& g) {
  if (f == g) {
    const auto a = cat.identity(f.dom()), b = cat.identity(f.cod());
    return RetractWitness<C>{a, b, a, b};
  }
  return retract_search(cat, f, g);
}

/// Lexicographically first injective matrix rows x cols (column-major order).
std::optional<VectMorphism> first_mono(const Vect& cat, const VectObject& dom, const VectObject& cod);
/// Retract search in Vect; arrows out of 0 go through first_mono instead of enumeration.
std::optional<RetractWitness<Vect>> is_retract_of(const Vect& cat, const VectMorphism& f, const VectMorphism& g);
/// Solved one prime at a time.
std::optional<RetractWitness<Mod>> is_retract_of(const Mod& cat, const ModMorphism& f, const ModMorphism& g);

template <FiniteCategory C>
ClassSpec<C> retract_closure(const C& cat, const ClassSpec<C>& s, const Universe<C>& u) {
  std::vector<typename C::Morphism> members;
  for (const auto& g : u.arrows) {
    if (s.contains(g)) members.push_back(g);
  }
  return {"Retr(" + s.name + ")",
          [cat, members](const typename C::Morphism& f) {
            for (const auto& g : members) {
              if (is_retract_of(cat, f, g)) return true;
            }
            return false;
          },
          "search"};
}

template <class C, class D>
ClassSpec<C> preimage_class(const FunctorDef<C, D>& v, const ClassSpec<D>& s) {
  return {v.name + "^-1(" + s.name + ")", [v, s](const typename C::Morphism& f) { return s.contains(v.morphism(f)); },
          s.provenance};
}

/// Structural decision of "initial -> X is an L-map" for the free-forgetful
/// comonads: X must be free.
inline std::optional<bool> free_object_fast_path(const Mod& cat, const ModObject& x) { return is_free_module(cat, x); }
inline std::optional<bool> free_object_fast_path(const MSet& cat, const MSetObject& x) { return is_free_mset(cat, x); }
template <class C>
std::optional<bool> free_object_fast_path(const C&, const typename C::Object&) {
  return std::nullopt;
}

/// Some cleavage on f is an L-coalgebra (exhaustive search).
template <FiniteCategory C>
bool exists_l_membership_by_search(const Awfs<C>& w, const typename C::Morphism& f) {
  const auto delta = w.delta(f);
  bool found = false;
  w.category().for_each_solution(left_cleavage_problem(w, f), [&](const typename C::Morphism& s) {
    found = is_l_coalgebra(w, LeftCleavage<C>{f, s}, delta);
    return !found;
  });
  return found;
}

template <FiniteCategory C>
bool exists_l_membership(const Awfs<C>& w, const typename C::Morphism& f, bool fast_path = true) {
  const auto& cat = w.category();
  if (fast_path && cat.is_initial(f.dom())) {
    if (auto fast = free_object_fast_path(cat, f.cod())) return *fast;
  }
  return exists_l_membership_by_search(w, f);
}

template <FiniteCategory C>
ClassSpec<C> exists_l_class(const Awfs<C>& w, bool fast_path = true) {
  return {"ExistsL", [w, fast_path](const typename C::Morphism& f) { return exists_l_membership(w, f, fast_path); },
          fast_path ? "structural" : "search"};
}

struct ComparisonRow {
  std::string arrow;
  std::string image;
  bool in_preimage = false;         // V f ∈ ∃𝕃
  bool in_retr_preimage = false;    // f ∈ Retr(V⁻¹∃𝕃)
  bool in_preimage_retr = false;    // V f ∈ Retr(∃𝕃)
  std::string retr_preimage_via;    // arrow of the source universe f is a retract of
  std::string preimage_retr_via;    // arrow of the target universe V f is a retract of
};

struct ComparisonReport {
  std::string functor;
  std::vector<ComparisonRow> rows;
  std::vector<std::string> violations;  // in Retr(V⁻¹∃𝕃) but not in V⁻¹(Retr ∃𝕃)
  std::vector<std::string> witnesses;   // in V⁻¹(Retr ∃𝕃) but not in Retr(V⁻¹∃𝕃)
  std::size_t images_checked = 0;       // retract witnesses transported along V and re-verified
  bool inclusion_holds() const { return violations.empty(); }
};

/// Compares Retr(V⁻¹∃𝕃), computed over the source universe, with V⁻¹(Retr ∃𝕃),
/// computed over the target universe.
template <FiniteCategory C, FiniteCategory D>
ComparisonReport eq12_compare(const C& src, const FunctorDef<C, D>& v, const Universe<C>& source,
                              const Awfs<D>& w, const Universe<D>& target, bool fast_path = true) {
  const D& tgt = w.category();
  ComparisonReport report;
  report.functor = v.name;

  std::vector<char> in_pre(source.arrows.size());
  for (std::size_t n = 0; n < source.arrows.size(); ++n) {
    in_pre[n] = exists_l_membership(w, v.morphism(source.arrows[n]), fast_path);
  }
  std::vector<typename D::Morphism> l_members;
  for (const auto& g : target.arrows) {
    if (exists_l_membership(w, g, fast_path)) l_members.push_back(g);
  }

  for (std::size_t n = 0; n < source.arrows.size(); ++n) {
    const auto& f = source.arrows[n];
    const auto vf = v.morphism(f);
    ComparisonRow row;
    row.arrow = src.describe(f);
    row.image = tgt.describe(vf);
    row.in_preimage = in_pre[n];
    for (std::size_t m = 0; m < source.arrows.size() && !row.in_retr_preimage; ++m) {
      if (!in_pre[m]) continue;
      if (auto wit = is_retract_of(src, f, source.arrows[m])) {
        row.in_retr_preimage = true;
        row.retr_preimage_via = src.describe(source.arrows[m]);
        const RetractWitness<D> image{v.morphism(wit->i), v.morphism(wit->j), v.morphism(wit->r),
                                      v.morphism(wit->q)};
        if (!is_retract_witness(tgt, vf, v.morphism(source.arrows[m]), image)) {
          report.violations.push_back(row.arrow + ": image of the retract witness is not a retract witness");
        }
        ++report.images_checked;
      }
    }
    for (const auto& g : l_members) {
      if (is_retract_of(tgt, vf, g)) {
        row.in_preimage_retr = true;
        row.preimage_retr_via = tgt.describe(g);
        break;
      }
    }
    if (row.in_retr_preimage && !row.in_preimage_retr) report.violations.push_back(row.arrow);
    if (row.in_preimage_retr && !row.in_retr_preimage) report.witnesses.push_back(row.arrow);
    report.rows.push_back(std::move(row));
  }
  return report;
}

/// Arrows initial -> X for each listed object.
template <FiniteCategory C>
Universe<C> arrows_from_initial(const C& cat, const std::vector<typename C::Object>& objects) {
  Universe<C> u;
  u.objects.push_back(cat.initial());
  for (const auto& x : objects) {
    if (!(x == cat.initial())) u.objects.push_back(x);
  }
  for (const auto& x : objects) u.arrows.push_back(initial_map(cat, x));
  return u;
}

}  // namespace wfs
