#pragma once

// Finite modules over Z/n, n squarefree. A module is a sorted multiset of
// cyclic factors Z/d (d | n, d > 1). By the Chinese remainder theorem every such
// module is a product of F_p-vector spaces, one per prime p | n, and morphisms
// are stored as one sparse F_p-matrix per prime.
//
// Element numbering: coordinate residues x_c in [0, d_c), mixed radix with the
// last coordinate least significant.
//
// Canonical morphism order: prime ascending, then the prime's matrix entries in
// column-major order, each in 0..p-1. This is the order of enumerate_homs and
// of every "first found" search result.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wfs/category.hpp"
#include "wfs/fp.hpp"
#include "wfs/vect.hpp"

namespace wfs {

struct ModObject {
  int n = 6;
  /// (divisor, multiplicity), divisors ascending, multiplicities positive.
  std::vector<std::pair<int, Index>> groups;

  /// Expanded factor list; only sensible for small objects.
  std::vector<int> factors() const;
  Index coordinate_count() const;

  friend bool operator==(const ModObject&, const ModObject&) = default;
  friend auto operator<=>(const ModObject&, const ModObject&) = default;
};

/// Element of a module: one sparse F_p-vector per prime of n.
struct ModElement {
  std::vector<SparseVec> parts;
  friend bool operator==(const ModElement&, const ModElement&) = default;
};

class ModMorphism {
 public:
  ModMorphism() = default;
  ModMorphism(ModObject dom, ModObject cod, std::vector<LinearMap> parts);

  const ModObject& dom() const noexcept { return dom_; }
  const ModObject& cod() const noexcept { return cod_; }
  const std::vector<LinearMap>& parts() const noexcept { return parts_; }

  friend bool operator==(const ModMorphism& a, const ModMorphism& b);

 private:
  ModObject dom_;
  ModObject cod_;
  std::vector<LinearMap> parts_;
};

class Mod {
 public:
  using Object = ModObject;
  using Morphism = ModMorphism;
  using Element = ModElement;

  /// Throws UnsupportedRing unless n >= 2 is squarefree.
  explicit Mod(int n = 6, SearchOptions options = {});

  int modulus() const noexcept { return n_; }
  const std::vector<Residue>& primes() const noexcept { return primes_; }
  const SearchOptions& options() const noexcept { return options_; }
  Mod with_options(SearchOptions options) const { return Mod(n_, options); }

  // -- objects -----------------------------------------------------------
  /// Module ⊕ Z/d_i; factors are validated and sorted.
  Object module(std::vector<int> factors) const;
  /// (Z/n)^k.
  Object free_module(Index rank) const;
  /// Canonical module with the given F_p-dimension per prime (invariant-factor layout).
  Object from_dims(const std::vector<Index>& dims) const;
  Index dim(const Object& a, std::size_t prime_index) const;
  std::vector<Index> dims(const Object& a) const;
  /// Number of elements, or nullopt if it does not fit in 63 bits.
  std::optional<Index> cardinality(const Object& a) const;
  /// All modules with at most max_size elements, in (size, factors) order.
  std::vector<Object> modules_up_to(Index max_size) const;

  // -- elements ----------------------------------------------------------
  Element element_at(const Object& a, Index index) const;
  Index index_of(const Object& a, const Element& x) const;
  Element element_from_residues(const Object& a, const std::vector<Index>& residues) const;
  std::vector<Index> residues_of(const Object& a, const Element& x) const;
  Element apply(const Morphism& f, const Element& x) const;

  // -- category structure ------------------------------------------------
  Object initial() const { return Object{n_, {}}; }
  bool is_initial(const Object& a) const { return a.groups.empty(); }
  Morphism identity(const Object& a) const;
  Morphism zero(const Object& a, const Object& b) const;
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Coproduct<Object, Morphism> coproduct(const Object& a, const Object& b) const;
  Morphism copair(const Morphism& f, const Morphism& g) const;

  bool for_each_solution(const HomProblem<Object, Morphism>& problem,
                         const std::function<bool(const Morphism&)>& visit) const;
  std::vector<Morphism> enumerate_homs(const Object& a, const Object& b) const;
  /// prod over primes of p^(dim_p(a) dim_p(b)), saturating.
  std::uint64_t hom_count(const Object& a, const Object& b) const;

  bool is_mono(const Morphism& f) const;
  bool is_epi(const Morphism& f) const;

  // -- matrices in the a_{ji} convention ----------------------------------
  /// a[j][i] is the image of generator i in coordinate j, a residue mod e_j with
  /// d_i * a[j][i] == 0 (mod e_j).
  Morphism from_matrix(const Object& dom, const Object& cod, const std::vector<std::vector<Index>>& a) const;
  std::vector<std::vector<Index>> to_matrix(const Morphism& f) const;

  // -- free-forgetful comonad ---------------------------------------------
  Object free_object(const Object& y) const;     // F U Y
  Morphism free_map(const Morphism& f) const;    // F U f
  Morphism counit(const Object& y) const;        // evaluation F U Y -> Y
  Morphism comult(const Object& y) const;        // [y] |-> [[y]]

  // -- per-prime components ------------------------------------------------
  Vect component(std::size_t prime_index) const;
  VectMorphism component_of(const Morphism& f, std::size_t prime_index) const;
  Morphism assemble(const Object& dom, const Object& cod, const std::vector<VectMorphism>& parts) const;

  // -- text ----------------------------------------------------------------
  std::string describe(const Object& a) const;
  std::string describe(const Morphism& f) const;
  std::optional<std::string> first_difference(const Morphism& f, const Morphism& g) const;

 private:
  struct Segment {
    Index a_start, a_count, b_start, b_count, comb_start;
  };
  std::vector<Segment> segments(const Object& a, const Object& b, std::size_t prime_index) const;
  Index position_of_coordinate(const Object& a, Index coordinate, std::size_t prime_index) const;
  Index crt(int divisor, const std::vector<Residue>& per_prime) const;

  int n_;
  std::vector<Residue> primes_;
  SearchOptions options_;
};

/// Z/q ⊗_{Z/n} (-) for a prime q | n; on objects each factor Z/d becomes Z/gcd(q, d).
Mod::Object tensor_prime(const Mod& cat, const Mod::Object& m, Residue q);
Mod::Morphism tensor_prime(const Mod& cat, const Mod::Morphism& f, Residue q);

/// M ≅ (Z/n)^k, decided from the per-prime dimensions.
bool is_free_module(const Mod& cat, const Mod::Object& m);
/// Oracle for is_free_module: search Hom((Z/n)^k, M) for a bijection.
bool is_free_module_by_search(const Mod& cat, const Mod::Object& m);
/// The evaluation map F U M -> M admits a module section (searched).
bool is_projective_module(const Mod& cat, const Mod::Object& m);
/// cod f / im f.
Mod::Object cokernel(const Mod& cat, const Mod::Morphism& f);
/// True when M has no element of additive order q.
bool has_no_torsion(const Mod& cat, const Mod::Object& m, Residue q);

}  // namespace wfs
