#include "wfs/vect.hpp"

#include <map>
#include <set>
#include <sstream>

namespace wfs {

VectMorphism::VectMorphism(VectObject dom, VectObject cod, LinearMap map)
    : dom_(dom), cod_(cod), map_(std::move(map)) {
  if (map_.rows() != cod_.dim || map_.cols() != dom_.dim) throw InvalidStructure("vect morphism: shape mismatch");
}

std::vector<LinearEquation> hom_equations(Index rows, Index cols,
                                          const std::vector<std::pair<LinearMap, LinearMap>>& pre,
                                          const std::vector<std::pair<LinearMap, LinearMap>>& post) {
  std::vector<LinearEquation> eqs;
  for (const auto& [a, b] : pre) {
    for (Index c = 0; c < a.cols(); ++c) {
      const SparseVec acol = a.column(c);
      const SparseVec bcol = b.column(c);
      for (Index r = 0; r < rows; ++r) {
        LinearEquation eq;
        for (const auto& [k, v] : acol.entries()) eq.coeffs.push_back({k * rows + r, v});
        eq.rhs = bcol.at(r);
        eqs.push_back(std::move(eq));
      }
    }
  }
  for (const auto& [c, e] : post) {
    // rows of c restricted to the unknown's codomain coordinates
    std::map<Index, std::vector<std::pair<Index, Residue>>> c_rows;
    for (Index m = 0; m < rows; ++m) {
      const SparseVec col = c.column(m);
      for (const auto& [r, v] : col.entries()) c_rows[r].push_back({m, v});
    }
    for (Index k = 0; k < cols; ++k) {
      const SparseVec ecol = e.column(k);
      std::set<Index> touched;
      for (const auto& [r, _] : c_rows) touched.insert(r);
      for (const auto& [r, _] : ecol.entries()) touched.insert(r);
      for (Index r : touched) {
        LinearEquation eq;
        if (auto it = c_rows.find(r); it != c_rows.end()) {
          for (const auto& [m, v] : it->second) eq.coeffs.push_back({k * rows + m, v});
        }
        eq.rhs = ecol.at(r);
        eqs.push_back(std::move(eq));
      }
    }
  }
  return eqs;
}

LinearMap matrix_from_entries(Residue p, Index rows, Index cols, const std::vector<Residue>& x) {
  std::vector<SparseVec> columns;
  columns.reserve(static_cast<std::size_t>(cols));
  for (Index j = 0; j < cols; ++j) {
    std::vector<SparseVec::Entry> entries;
    for (Index r = 0; r < rows; ++r) {
      const Residue v = x[static_cast<std::size_t>(j * rows + r)];
      if (v != 0) entries.push_back({r, v});
    }
    columns.emplace_back(p, std::move(entries));
  }
  return LinearMap(p, rows, cols, std::move(columns));
}

Vect::Vect(Residue p, SearchOptions options) : p_(p), options_(options) {}

Vect::Morphism Vect::identity(const Object& a) const { return {a, a, LinearMap::identity(p_, a.dim)}; }

Vect::Morphism Vect::compose(const Morphism& g, const Morphism& f) const {
  if (!(f.cod() == g.dom())) throw BoundaryMismatch("vect: cod f != dom g");
  return {f.dom(), g.cod(), wfs::compose(g.matrix(), f.matrix())};
}

Coproduct<Vect::Object, Vect::Morphism> Vect::coproduct(const Object& a, const Object& b) const {
  const Object sum{p_, a.dim + b.dim};
  const Index shift = a.dim;
  return {sum, Morphism(a, sum, LinearMap(p_, sum.dim, a.dim, [](Index j) { return SparseVec::unit(j); })),
          Morphism(b, sum, LinearMap(p_, sum.dim, b.dim, [shift](Index j) { return SparseVec::unit(shift + j); }))};
}

Vect::Morphism Vect::copair(const Morphism& f, const Morphism& g) const {
  if (!(f.cod() == g.cod())) throw BoundaryMismatch("vect copair: codomains differ");
  const Object sum{p_, f.dom().dim + g.dom().dim};
  const Index split = f.dom().dim;
  const LinearMap fm = f.matrix(), gm = g.matrix();
  return {sum, f.cod(), LinearMap(p_, f.cod().dim, sum.dim, [fm, gm, split](Index j) {
            return j < split ? fm.column(j) : gm.column(j - split);
          })};
}

bool Vect::for_each_solution(const HomProblem<Object, Morphism>& problem,
                             const std::function<bool(const Morphism&)>& visit) const {
  std::vector<std::pair<LinearMap, LinearMap>> pre, post;
  for (const auto& [a, b] : problem.pre) {
    if (!(a.cod() == problem.dom) || !(b.dom() == a.dom()) || !(b.cod() == problem.cod))
      throw BoundaryMismatch("vect search: pre-constraint shape");
    pre.push_back({a.matrix(), b.matrix()});
  }
  for (const auto& [c, e] : problem.post) {
    if (!(c.dom() == problem.cod) || !(e.dom() == problem.dom) || !(e.cod() == c.cod()))
      throw BoundaryMismatch("vect search: post-constraint shape");
    post.push_back({c.matrix(), e.matrix()});
  }
  const Index rows = problem.cod.dim, cols = problem.dom.dim;
  auto space = AffineSpace::solve(p_, rows * cols, hom_equations(rows, cols, pre, post));
  if (!space) return false;
  std::uint64_t visited = 0;
  return space->enumerate(options_.order == SearchOrder::reverse, [&](const std::vector<Residue>& x) {
    if (++visited > options_.cap) throw HomSetTooLarge(space->size(), "vect search exceeded cap");
    return visit(Morphism(problem.dom, problem.cod, matrix_from_entries(p_, rows, cols, x)));
  });
}

std::vector<Vect::Morphism> Vect::enumerate_homs(const Object& a, const Object& b) const {
  HomProblem<Object, Morphism> problem{a, b, {}, {}};
  std::vector<Morphism> out;
  for_each_solution(problem, [&](const Morphism& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

bool Vect::is_mono(const Morphism& f) const { return rank(f.matrix()) == f.dom().dim; }
bool Vect::is_epi(const Morphism& f) const { return rank(f.matrix()) == f.cod().dim; }

std::string Vect::describe(const Object& a) const {
  return "F" + std::to_string(p_) + "^" + std::to_string(a.dim);
}

std::string Vect::describe(const Morphism& f) const {
  std::ostringstream os;
  os << describe(f.dom()) << "->" << describe(f.cod()) << " [";
  for (Index j = 0; j < f.dom().dim; ++j) {
    if (j) os << ";";
    bool first = true;
    const SparseVec col = f.matrix().column(j);
    for (const auto& [i, v] : col.entries()) {
      os << (first ? "" : ",") << i << ":" << v;
      first = false;
    }
  }
  os << "]";
  return os.str();
}

std::optional<std::string> Vect::first_difference(const Morphism& f, const Morphism& g) const {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) return "boundaries differ";
  for (Index j = 0; j < f.dom().dim; ++j) {
    if (f.matrix().column(j) != g.matrix().column(j)) return "basis vector " + std::to_string(j);
  }
  return std::nullopt;
}

}  // namespace wfs
