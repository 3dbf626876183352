#pragma once

// Finite-dimensional vector spaces over F_p. Mod_{Z/n} for squarefree n splits
// as a product of these, which is how module searches are decomposed by prime.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wfs/category.hpp"
#include "wfs/fp.hpp"

namespace wfs {

struct VectObject {
  Residue p = 2;
  Index dim = 0;
  friend bool operator==(const VectObject&, const VectObject&) = default;
};

class VectMorphism {
 public:
  VectMorphism() = default;
  VectMorphism(VectObject dom, VectObject cod, LinearMap map);

  const VectObject& dom() const noexcept { return dom_; }
  const VectObject& cod() const noexcept { return cod_; }
  const LinearMap& matrix() const noexcept { return map_; }

  friend bool operator==(const VectMorphism& a, const VectMorphism& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.map_ == b.map_;
  }

 private:
  VectObject dom_;
  VectObject cod_;
  LinearMap map_;
};

/// Equations in the entries of an unknown rows x cols matrix d (column-major
/// unknown numbering) expressing d∘a = b for each pre pair and c∘d = e for each
/// post pair.
std::vector<LinearEquation> hom_equations(Index rows, Index cols,
                                          const std::vector<std::pair<LinearMap, LinearMap>>& pre,
                                          const std::vector<std::pair<LinearMap, LinearMap>>& post);

/// Matrix with the given column-major entries.
LinearMap matrix_from_entries(Residue p, Index rows, Index cols, const std::vector<Residue>& x);

class Vect {
 public:
  using Object = VectObject;
  using Morphism = VectMorphism;

  explicit Vect(Residue p, SearchOptions options = {});

  Residue prime() const noexcept { return p_; }
  const SearchOptions& options() const noexcept { return options_; }

  Object object(Index dim) const { return {p_, dim}; }
  Object initial() const { return {p_, 0}; }
  bool is_initial(const Object& a) const { return a.dim == 0; }

  Morphism identity(const Object& a) const;
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Coproduct<Object, Morphism> coproduct(const Object& a, const Object& b) const;
  Morphism copair(const Morphism& f, const Morphism& g) const;

  bool for_each_solution(const HomProblem<Object, Morphism>& problem,
                         const std::function<bool(const Morphism&)>& visit) const;
  std::vector<Morphism> enumerate_homs(const Object& a, const Object& b) const;

  bool is_mono(const Morphism& f) const;
  bool is_epi(const Morphism& f) const;

  std::string describe(const Object& a) const;
  std::string describe(const Morphism& f) const;
  std::optional<std::string> first_difference(const Morphism& f, const Morphism& g) const;

 private:
  Residue p_;
  SearchOptions options_;
};

}  // namespace wfs
