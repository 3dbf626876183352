#pragma once

// Finite M-sets for a finite monoid M, with equivariant maps. FinSet is the case
// of the trivial monoid. The default monoid is {1, e} with e·e = e.
//
// An object stores the full action table act[m][x] = m·x. Element 0 of the
// monoid is its unit. Morphisms are tables of least indices; the canonical order
// of a hom-set is lexicographic in the table.

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wfs/category.hpp"

namespace wfs {

struct MonoidDef {
  std::vector<std::string> names;
  /// mul[a][b] = a·b; element 0 is the unit.
  std::vector<std::vector<int>> mul;

  int order() const { return static_cast<int>(mul.size()); }
  /// Throws InvalidStructure unless mul is a monoid with unit 0.
  void validate() const;

  static MonoidDef idempotent();  // {1, e}, e·e = e
  static MonoidDef trivial();     // {1}

  friend bool operator==(const MonoidDef&, const MonoidDef&) = default;
};

struct MSetObject {
  /// act[m][x] = m·x; act[0] is the identity.
  std::vector<std::vector<int>> act;

  int size() const { return act.empty() ? 0 : static_cast<int>(act[0].size()); }

  friend bool operator==(const MSetObject&, const MSetObject&) = default;
  friend auto operator<=>(const MSetObject&, const MSetObject&) = default;
};

class MSetMorphism {
 public:
  MSetMorphism() = default;
  MSetMorphism(MSetObject dom, MSetObject cod, std::vector<int> table)
      : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {}

  const MSetObject& dom() const noexcept { return dom_; }
  const MSetObject& cod() const noexcept { return cod_; }
  const std::vector<int>& table() const noexcept { return table_; }
  int operator()(int x) const { return table_[static_cast<std::size_t>(x)]; }

  friend bool operator==(const MSetMorphism&, const MSetMorphism&) = default;

 private:
  MSetObject dom_;
  MSetObject cod_;
  std::vector<int> table_;
};

class MSet {
 public:
  using Object = MSetObject;
  using Morphism = MSetMorphism;

  explicit MSet(MonoidDef monoid = MonoidDef::idempotent(), SearchOptions options = {});

  const MonoidDef& monoid() const noexcept { return monoid_; }
  const SearchOptions& options() const noexcept { return options_; }
  MSet with_options(SearchOptions options) const { return MSet(monoid_, options); }
  bool is_trivial_monoid() const { return monoid_.order() == 1; }

  // -- objects -----------------------------------------------------------
  /// Validated object from tables for the non-unit monoid elements.
  Object object(int size, const std::vector<std::vector<int>>& tables) const;
  /// Every element fixed by every monoid element.
  Object trivial_action(int size) const;
  /// The monoid acting on itself by left multiplication.
  Object regular() const { return free_on(1); }
  /// M × S with S of the given size.
  Object free_on(int size) const;
  /// Every object of at most max_size elements, by size then table.
  std::vector<Object> objects_up_to(int max_size) const;
  /// Throws InvalidStructure unless the tables form an action.
  void validate(const Object& a) const;

  // -- category structure ------------------------------------------------
  Object initial() const;
  bool is_initial(const Object& a) const { return a.size() == 0; }
  Morphism identity(const Object& a) const;
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Coproduct<Object, Morphism> coproduct(const Object& a, const Object& b) const;
  Morphism copair(const Morphism& f, const Morphism& g) const;
  /// Validated morphism from a table.
  Morphism morphism(const Object& dom, const Object& cod, std::vector<int> table) const;

  bool for_each_solution(const HomProblem<Object, Morphism>& problem,
                         const std::function<bool(const Morphism&)>& visit) const;
  std::vector<Morphism> enumerate_homs(const Object& a, const Object& b) const;

  bool is_mono(const Morphism& f) const;
  bool is_epi(const Morphism& f) const;

  // -- free-forgetful comonad ----------------------------------------------
  Object free_object(const Object& y) const { return free_on(y.size()); }
  Morphism free_map(const Morphism& f) const;  // (m, y) -> (m, f y)
  Morphism counit(const Object& y) const;      // (m, y) -> m·y
  Morphism comult(const Object& y) const;      // (m, y) -> (m, (1, y))

  // -- text ----------------------------------------------------------------
  std::string describe(const Object& a) const;
  std::string describe(const Morphism& f) const;
  std::optional<std::string> first_difference(const Morphism& f, const Morphism& g) const;

 private:
  MonoidDef monoid_;
  SearchOptions options_;
};

/// Sets and functions: M-sets over the trivial monoid.
inline MSet finset(SearchOptions options = {}) { return MSet(MonoidDef::trivial(), options); }

/// X ≅ M × S for some S (fixed-point counts first, then an isomorphism search).
bool is_free_mset(const MSet& cat, const MSetObject& x);
/// Number of x with m·x = x, per monoid element.
std::vector<int> fixed_point_counts(const MSet& cat, const MSetObject& x);

}  // namespace wfs
