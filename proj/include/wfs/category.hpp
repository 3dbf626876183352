#pragma once

// Shared vocabulary for the finite concrete categories: squares, coproducts,
// constrained hom searches, comonads and the category concept the generic
// algorithms are written against.

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wfs/errors.hpp"

namespace wfs {

enum class SearchOrder { forward, reverse };

struct SearchOptions {
  SearchOrder order = SearchOrder::forward;
  /// Maximum number of candidates a single search or enumeration may visit.
  std::uint64_t cap = 1'000'000;
};

/// A morphism (h, k): f -> g of the arrow category, i.e. g∘h = k∘f.
template <class Morphism>
struct ArrowSquare {
  Morphism f;
  Morphism g;
  Morphism h;  // dom f -> dom g
  Morphism k;  // cod f -> cod g
};

template <class Object, class Morphism>
struct Coproduct {
  Object object;
  Morphism inj1;
  Morphism inj2;
};

/// Find d: dom -> cod with d∘a = b for every (a, b) in `pre` and
/// c∘d = e for every (c, e) in `post`.
template <class Object, class Morphism>
struct HomProblem {
  Object dom;
  Object cod;
  std::vector<std::pair<Morphism, Morphism>> pre;
  std::vector<std::pair<Morphism, Morphism>> post;
};

/// The endofunctor, counit and comultiplication of a comonad on C. Kept as
/// replaceable function objects so that law suites can be run against
/// deliberately broken data.
template <class C>
struct Comonad {
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;
  std::function<Object(const Object&)> object;
  std::function<Morphism(const Morphism&)> map;
  std::function<Morphism(const Object&)> counit;  // υ_X: PX -> X
  std::function<Morphism(const Object&)> comult;  // Δ_X: PX -> PPX
};

template <class C>
concept FiniteCategory = requires(const C& cat, const typename C::Object& a, const typename C::Morphism& f,
                                  const HomProblem<typename C::Object, typename C::Morphism>& problem,
                                  const std::function<bool(const typename C::Morphism&)>& visit) {
  { cat.identity(a) } -> std::same_as<typename C::Morphism>;
  { cat.compose(f, f) } -> std::same_as<typename C::Morphism>;
  { cat.initial() } -> std::same_as<typename C::Object>;
  { cat.is_initial(a) } -> std::same_as<bool>;
  { cat.coproduct(a, a) } -> std::same_as<Coproduct<typename C::Object, typename C::Morphism>>;
  { cat.copair(f, f) } -> std::same_as<typename C::Morphism>;
  { cat.for_each_solution(problem, visit) } -> std::same_as<bool>;
  { cat.enumerate_homs(a, a) } -> std::same_as<std::vector<typename C::Morphism>>;
  { cat.is_mono(f) } -> std::same_as<bool>;
  { cat.is_epi(f) } -> std::same_as<bool>;
  { cat.describe(f) } -> std::same_as<std::string>;
  { cat.describe(a) } -> std::same_as<std::string>;
  { cat.first_difference(f, f) } -> std::same_as<std::optional<std::string>>;
  { f.dom() } -> std::convertible_to<typename C::Object>;
  { f.cod() } -> std::convertible_to<typename C::Object>;
  { f == f } -> std::convertible_to<bool>;
  { cat.options() } -> std::convertible_to<SearchOptions>;
};

template <class C>
using SquareOf = ArrowSquare<typename C::Morphism>;

/// A finite stand-in for the ambient category: objects plus chosen arrows.
template <class C>
struct Universe {
  std::vector<typename C::Object> objects;
  std::vector<typename C::Morphism> arrows;
};

template <class C>
using ProblemOf = HomProblem<typename C::Object, typename C::Morphism>;

/// First solution of a constrained hom search in the category's configured order.
template <FiniteCategory C>
std::optional<typename C::Morphism> first_solution(const C& cat, const ProblemOf<C>& problem) {
  std::optional<typename C::Morphism> found;
  cat.for_each_solution(problem, [&](const typename C::Morphism& d) {
    found = d;
    return false;
  });
  return found;
}

template <FiniteCategory C>
bool square_commutes(const C& cat, const SquareOf<C>& sq) {
  return cat.compose(sq.g, sq.h) == cat.compose(sq.k, sq.f);
}

template <FiniteCategory C>
void require_commutes(const C& cat, const SquareOf<C>& sq) {
  if (sq.h.dom() != sq.f.dom() || sq.h.cod() != sq.g.dom() || sq.k.dom() != sq.f.cod() ||
      sq.k.cod() != sq.g.cod()) {
    throw NonCommutingSquare("square sides do not match");
  }
  if (!square_commutes(cat, sq)) throw NonCommutingSquare("square does not commute: " + cat.describe(sq.f) +
                                                          " -> " + cat.describe(sq.g));
}

/// Unique map out of the initial object.
template <FiniteCategory C>
typename C::Morphism initial_map(const C& cat, const typename C::Object& x) {
  auto homs = cat.enumerate_homs(cat.initial(), x);
  return homs.front();
}

/// Codiagonal X + X -> X.
template <FiniteCategory C>
typename C::Morphism codiagonal(const C& cat, const typename C::Object& x) {
  const auto id = cat.identity(x);
  return cat.copair(id, id);
}

/// Every morphism between the given objects, in universe order.
template <FiniteCategory C>
std::vector<typename C::Morphism> all_arrows(const C& cat, const std::vector<typename C::Object>& objects) {
  std::vector<typename C::Morphism> out;
  for (const auto& a : objects) {
    for (const auto& b : objects) {
      auto homs = cat.enumerate_homs(a, b);
      out.insert(out.end(), homs.begin(), homs.end());
    }
  }
  return out;
}

template <FiniteCategory C>
Universe<C> full_universe(const C& cat, std::vector<typename C::Object> objects) {
  Universe<C> u{std::move(objects), {}};
  u.arrows = all_arrows(cat, u.objects);
  return u;
}

/// Calls visit(f, g, h, k) for every commuting square between arrows of the
/// universe, with h and k ranging over all homs between the relevant objects.
template <FiniteCategory C, class Visit>
void for_each_square(const C& cat, const Universe<C>& u, Visit&& visit) {
  for (const auto& f : u.arrows) {
    for (const auto& g : u.arrows) {
      const auto hs = cat.enumerate_homs(f.dom(), g.dom());
      const auto ks = cat.enumerate_homs(f.cod(), g.cod());
      for (const auto& h : hs) {
        const auto gh = cat.compose(g, h);
        for (const auto& k : ks) {
          if (gh == cat.compose(k, f)) visit(f, g, h, k);
        }
      }
    }
  }
}

}  // namespace wfs
