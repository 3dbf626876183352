#include "wfs/analysis.hpp"

namespace wfs {

std::optional<VectMorphism> first_mono(const Vect& cat, const VectObject& dom, const VectObject& cod) {
  if (dom.dim > cod.dim) return std::nullopt;
  const Residue p = cat.prime();
  std::vector<SparseVec> chosen;
  for (Index c = 0; c < dom.dim; ++c) {
    // candidates in lexicographic order: row 0 is the most significant digit
    std::vector<Residue> digits(static_cast<std::size_t>(cod.dim), 0);
    while (true) {
      Index r = cod.dim - 1;
      while (r >= 0 && digits[static_cast<std::size_t>(r)] == p - 1) digits[static_cast<std::size_t>(r--)] = 0;
      if (r < 0) return std::nullopt;
      ++digits[static_cast<std::size_t>(r)];
      std::vector<SparseVec::Entry> entries;
      for (Index k = 0; k < cod.dim; ++k) {
        if (digits[static_cast<std::size_t>(k)] != 0) entries.push_back({k, digits[static_cast<std::size_t>(k)]});
      }
      chosen.emplace_back(p, std::move(entries));
      const LinearMap trial(p, cod.dim, static_cast<Index>(chosen.size()), chosen);
      if (rank(trial) == static_cast<Index>(chosen.size())) break;
      chosen.pop_back();
    }
  }
  return VectMorphism(dom, cod, LinearMap(p, cod.dim, dom.dim, chosen));
}

std::optional<RetractWitness<Vect>> is_retract_of(const Vect& cat, const VectMorphism& f, const VectMorphism& g) {
  if (f == g) {
    const auto a = cat.identity(f.dom()), b = cat.identity(f.cod());
    return RetractWitness<Vect>{a, b, a, b};
  }
  if (f.dom().dim != 0 || g.dom().dim != 0) return retract_search(cat, f, g);
  auto j = first_mono(cat, f.cod(), g.cod());
  if (!j) return std::nullopt;
  const Residue p = cat.prime();
  const VectMorphism i(f.dom(), g.dom(), LinearMap::zero(p, 0, 0));
  const VectMorphism r(g.dom(), f.dom(), LinearMap::zero(p, 0, 0));
  auto q = first_solution(cat, ProblemOf<Vect>{g.cod(), f.cod(), {{*j, cat.identity(f.cod())}, {g, cat.compose(f, r)}}, {}});
  if (!q) return std::nullopt;
  return RetractWitness<Vect>{i, *j, r, *q};
}

std::optional<RetractWitness<Mod>> is_retract_of(const Mod& cat, const ModMorphism& f, const ModMorphism& g) {
  if (f == g) {
    const auto a = cat.identity(f.dom()), b = cat.identity(f.cod());
    return RetractWitness<Mod>{a, b, a, b};
  }
  std::vector<VectMorphism> is, js, rs, qs;
  for (std::size_t pi = 0; pi < cat.primes().size(); ++pi) {
    const Vect v = cat.component(pi);
    auto w = is_retract_of(v, cat.component_of(f, pi), cat.component_of(g, pi));
    if (!w) return std::nullopt;
    is.push_back(w->i);
    js.push_back(w->j);
    rs.push_back(w->r);
    qs.push_back(w->q);
  }
  return RetractWitness<Mod>{cat.assemble(f.dom(), g.dom(), is), cat.assemble(f.cod(), g.cod(), js),
                             cat.assemble(g.dom(), f.dom(), rs), cat.assemble(g.cod(), f.cod(), qs)};
}

}  // namespace wfs
