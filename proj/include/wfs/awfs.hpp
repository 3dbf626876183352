#pragma once

// The algebraic weak factorization system generated by a comonad P on a
// category with finite coproducts:
//
//   X --ι₁--> X + PY --<f, υ_Y>--> Y
//
// with δ_f = 1_X + Pι₂∘Δ_Y and μ_f = 1_X + ∇_PY. All structure maps are built by
// formula; searches live in cloven.hpp and analysis.hpp.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wfs/category.hpp"

namespace wfs {

template <class C>
struct FactorizationTriple {
  typename C::Morphism f;
  typename C::Morphism L;     // X -> Ef
  typename C::Object E;       // X + PY
  typename C::Morphism R;     // Ef -> Y
  typename C::Morphism inj2;  // PY -> Ef
};

/// A map p with a P-section i: p∘i = υ.
template <class C>
struct PSplitEpi {
  typename C::Morphism p;
  typename C::Morphism i;
};

enum class LawStatus { pass, fail, skipped };

inline std::string to_string(LawStatus s) {
  switch (s) {
    case LawStatus::pass: return "pass";
    case LawStatus::fail: return "fail";
    case LawStatus::skipped: return "skipped";
  }
  return "?";
}

struct LawResult {
  std::string law;
  std::size_t subject = 0;  // index of the arrow or object in the universe
  std::string subject_text;
  LawStatus status = LawStatus::pass;
  std::string detail;  // first differing element, or why the check was skipped
};

struct LawReport {
  std::vector<LawResult> results;

  void sort() {
    std::stable_sort(results.begin(), results.end(), [](const LawResult& a, const LawResult& b) {
      return std::tie(a.law, a.subject) < std::tie(b.law, b.subject);
    });
  }
  std::size_t count(LawStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [s](const LawResult& r) { return r.status == s; }));
  }
  bool passed() const { return count(LawStatus::fail) == 0; }
};

template <FiniteCategory C>
class Awfs {
 public:
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;
  using Triple = FactorizationTriple<C>;
  using Square = SquareOf<C>;

  Awfs(C cat, Comonad<C> comonad) : cat_(std::move(cat)), p_(std::move(comonad)) {}

  const C& category() const noexcept { return cat_; }
  const Comonad<C>& comonad() const noexcept { return p_; }

  /// Replacement structure maps, for negative-control fixtures.
  std::function<Morphism(const Awfs&, const Morphism&)> delta_override;
  std::function<Morphism(const Awfs&, const Morphism&)> mu_override;

  Triple factorize(const Morphism& f) const {
    const Object py = p_.object(f.cod());
    auto cp = cat_.coproduct(f.dom(), py);
    auto r = cat_.copair(f, p_.counit(f.cod()));
    return {f, cp.inj1, cp.object, r, cp.inj2};
  }
  Morphism L(const Morphism& f) const { return factorize(f).L; }
  Morphism R(const Morphism& f) const { return factorize(f).R; }
  Object E(const Morphism& f) const { return factorize(f).E; }

  /// δ_f: Ef -> E(Lf).
  Morphism delta(const Morphism& f) const {
    if (delta_override) return delta_override(*this, f);
    return delta_formula(f);
  }
  Morphism delta_formula(const Morphism& f) const {
    const Triple t = factorize(f);
    const Triple tl = factorize(t.L);
    // Pι₂ ∘ Δ_Y : PY -> P(Ef), then into E(Lf) = X + P(Ef)
    const Morphism lifted = cat_.compose(p_.map(t.inj2), p_.comult(f.cod()));
    return cat_.copair(tl.L, cat_.compose(tl.inj2, lifted));
  }

  /// μ_f: E(Rf) -> Ef.
  Morphism mu(const Morphism& f) const {
    if (mu_override) return mu_override(*this, f);
    return mu_formula(f);
  }
  Morphism mu_formula(const Morphism& f) const {
    const Triple t = factorize(f);
    return cat_.copair(cat_.identity(t.E), t.inj2);
  }

  /// E(h, k) = h + P(k): Ef -> Eg for a commuting square (h, k): f -> g.
  Morphism e_on_square(const Square& sq) const {
    require_commutes(cat_, sq);
    const Triple tg = factorize(sq.g);
    return cat_.copair(cat_.compose(tg.L, sq.h), cat_.compose(tg.inj2, p_.map(sq.k)));
  }
  Morphism e_on_square(const Morphism& f, const Morphism& g, const Morphism& h, const Morphism& k) const {
    return e_on_square(Square{f, g, h, k});
  }

  /// First i: PY -> X with p∘i = υ_Y.
  std::optional<Morphism> find_p_section(const Morphism& p) const {
    const Object py = p_.object(p.cod());
    ProblemOf<C> problem{py, p.dom(), {}, {{p, p_.counit(p.cod())}}};
    return first_solution(cat_, problem);
  }

 private:
  C cat_;
  Comonad<C> p_;
};

namespace detail {

template <FiniteCategory C>
void record(const C& cat, LawReport& report, const std::string& law, std::size_t subject, const std::string& text,
            const std::function<std::pair<typename C::Morphism, typename C::Morphism>()>& sides) {
  LawResult r{law, subject, text, LawStatus::pass, ""};
  try {
    const auto [lhs, rhs] = sides();
    if (auto diff = cat.first_difference(lhs, rhs)) {
      r.status = LawStatus::fail;
      r.detail = *diff;
    }
  } catch (const NonCommutingSquare& e) {
    // the law is stated through E on a square that the structure maps fail to close
    r.status = LawStatus::fail;
    r.detail = e.what();
  } catch (const ObjectTooLarge& e) {
    r.status = LawStatus::skipped;
    r.detail = e.what();
  } catch (const HomSetTooLarge& e) {
    r.status = LawStatus::skipped;
    r.detail = e.what();
  }
  report.results.push_back(std::move(r));
}

}  // namespace detail

/// Pointwise AWFS laws on every arrow of the universe, plus naturality of δ and
/// μ on every commuting square between universe arrows.
template <FiniteCategory C>
LawReport check_awfs_laws(const Awfs<C>& w, const Universe<C>& u, bool naturality = true) {
  using M = typename C::Morphism;
  const C& cat = w.category();
  LawReport report;
  for (std::size_t n = 0; n < u.arrows.size(); ++n) {
    const M& f = u.arrows[n];
    const std::string text = cat.describe(f);
    auto law = [&](const std::string& id, const std::function<std::pair<M, M>()>& sides) {
      detail::record<C>(cat, report, id, n, text, sides);
    };
    law("factorization", [&] { return std::pair{cat.compose(w.R(f), w.L(f)), f}; });
    law("delta.left_triangle", [&] { return std::pair{cat.compose(w.delta(f), w.L(f)), w.L(w.L(f))}; });
    law("delta.right_triangle", [&] {
      const auto t = w.factorize(f);
      return std::pair{cat.compose(w.R(t.L), w.delta(f)), cat.identity(t.E)};
    });
    law("mu.left_triangle", [&] {
      const auto t = w.factorize(f);
      return std::pair{cat.compose(w.mu(f), w.L(t.R)), cat.identity(t.E)};
    });
    law("mu.right_triangle", [&] {
      const auto t = w.factorize(f);
      return std::pair{cat.compose(t.R, w.mu(f)), w.R(t.R)};
    });
    law("comonad.counit_inner", [&] {
      const auto t = w.factorize(f);
      return std::pair{cat.compose(w.R(t.L), w.delta(f)), cat.identity(t.E)};
    });
    law("comonad.counit_outer", [&] {
      const auto t = w.factorize(f);
      const auto e = w.e_on_square(t.L, f, cat.identity(f.dom()), t.R);
      return std::pair{cat.compose(e, w.delta(f)), cat.identity(t.E)};
    });
    law("comonad.coassociativity", [&] {
      const auto t = w.factorize(f);
      const auto d = w.delta(f);
      const auto e = w.e_on_square(t.L, w.L(t.L), cat.identity(f.dom()), d);
      return std::pair{cat.compose(w.delta(t.L), d), cat.compose(e, d)};
    });
    law("monad.unit_inner", [&] {
      const auto t = w.factorize(f);
      return std::pair{cat.compose(w.mu(f), w.L(t.R)), cat.identity(t.E)};
    });
    law("monad.unit_outer", [&] {
      const auto t = w.factorize(f);
      const auto e = w.e_on_square(f, t.R, t.L, cat.identity(f.cod()));
      return std::pair{cat.compose(w.mu(f), e), cat.identity(t.E)};
    });
    law("monad.associativity", [&] {
      const auto t = w.factorize(f);
      const auto m = w.mu(f);
      const auto rr = w.R(t.R);
      const auto e = w.e_on_square(rr, t.R, m, cat.identity(f.cod()));
      return std::pair{cat.compose(m, w.mu(t.R)), cat.compose(m, e)};
    });
  }
  if (naturality) {
    std::size_t square = 0;
    for_each_square(cat, u, [&](const M& f, const M& g, const M& h, const M& k) {
      const std::string text = cat.describe(f) + " => " + cat.describe(g) + " via " + cat.describe(h) + ", " +
                               cat.describe(k);
      detail::record<C>(cat, report, "naturality.delta", square, text, [&] {
        const auto ehk = w.e_on_square(f, g, h, k);
        const auto outer = w.e_on_square(w.L(f), w.L(g), h, ehk);
        return std::pair{cat.compose(outer, w.delta(f)), cat.compose(w.delta(g), ehk)};
      });
      detail::record<C>(cat, report, "naturality.mu", square, text, [&] {
        const auto ehk = w.e_on_square(f, g, h, k);
        const auto inner = w.e_on_square(w.R(f), w.R(g), ehk, k);
        return std::pair{cat.compose(w.mu(g), inner), cat.compose(ehk, w.mu(f))};
      });
      ++square;
    });
  }
  report.sort();
  return report;
}

/// Counit laws, coassociativity and naturality of the comonad P.
template <FiniteCategory C>
LawReport check_comonad_laws(const C& cat, const Comonad<C>& p, const Universe<C>& u) {
  using M = typename C::Morphism;
  LawReport report;
  for (std::size_t n = 0; n < u.objects.size(); ++n) {
    const auto& x = u.objects[n];
    const std::string text = cat.describe(x);
    auto law = [&](const std::string& id, const std::function<std::pair<M, M>()>& sides) {
      detail::record<C>(cat, report, id, n, text, sides);
    };
    law("comonad_p.counit_left", [&] {
      const auto px = p.object(x);
      return std::pair{cat.compose(p.counit(px), p.comult(x)), cat.identity(px)};
    });
    law("comonad_p.counit_right", [&] {
      const auto px = p.object(x);
      return std::pair{cat.compose(p.map(p.counit(x)), p.comult(x)), cat.identity(px)};
    });
    law("comonad_p.coassociativity", [&] {
      const auto d = p.comult(x);
      return std::pair{cat.compose(p.comult(p.object(x)), d), cat.compose(p.map(d), d)};
    });
  }
  for (std::size_t n = 0; n < u.arrows.size(); ++n) {
    const auto& f = u.arrows[n];
    const std::string text = cat.describe(f);
    auto law = [&](const std::string& id, const std::function<std::pair<M, M>()>& sides) {
      detail::record<C>(cat, report, id, n, text, sides);
    };
    law("comonad_p.naturality_counit", [&] {
      return std::pair{cat.compose(p.counit(f.cod()), p.map(f)), cat.compose(f, p.counit(f.dom()))};
    });
    law("comonad_p.naturality_comult", [&] {
      return std::pair{cat.compose(p.comult(f.cod()), p.map(f)), cat.compose(p.map(p.map(f)), p.comult(f.dom()))};
    });
  }
  report.sort();
  return report;
}

}  // namespace wfs
