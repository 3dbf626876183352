#include "wfs/mset.hpp"

#include <algorithm>
#include <sstream>

namespace wfs {

namespace {

std::string join(const std::vector<int>& xs) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << "]";
  return os.str();
}

}  // namespace

void MonoidDef::validate() const {
  const int n = order();
  if (n == 0) throw InvalidStructure("monoid has no elements");
  if (!names.empty() && static_cast<int>(names.size()) != n) throw InvalidStructure("monoid names do not match its order");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n) throw InvalidStructure("monoid table is not square");
    for (int v : row) {
      if (v < 0 || v >= n) throw InvalidStructure("monoid table entry out of range");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (mul[0][a] != a || mul[a][0] != a) throw InvalidStructure("element 0 is not a two-sided unit");
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) throw InvalidStructure("monoid table is not associative");
      }
    }
  }
}

MonoidDef MonoidDef::idempotent() { return {{"1", "e"}, {{0, 1}, {1, 1}}}; }
MonoidDef MonoidDef::trivial() { return {{"1"}, {{0}}}; }

MSet::MSet(MonoidDef monoid, SearchOptions options) : monoid_(std::move(monoid)), options_(options) {
  monoid_.validate();
}

void MSet::validate(const Object& a) const {
  const int m = monoid_.order();
  if (static_cast<int>(a.act.size()) != m) throw InvalidStructure("action needs one table per monoid element");
  const int n = a.size();
  for (const auto& row : a.act) {
    if (static_cast<int>(row.size()) != n) throw InvalidStructure("action tables differ in size");
    for (int v : row) {
      if (v < 0 || v >= n) throw InvalidStructure("action table entry out of range");
    }
  }
  for (int x = 0; x < n; ++x) {
    if (a.act[0][x] != x) throw InvalidStructure("unit does not act as the identity");
    for (int s = 0; s < m; ++s) {
      for (int t = 0; t < m; ++t) {
        if (a.act[s][a.act[t][x]] != a.act[monoid_.mul[s][t]][x]) {
          throw InvalidStructure("tables are not an action: (st)x != s(tx)");
        }
      }
    }
  }
}

MSet::Object MSet::object(int size, const std::vector<std::vector<int>>& tables) const {
  if (size < 0) throw InvalidStructure("negative size");
  if (static_cast<int>(tables.size()) != monoid_.order() - 1) {
    throw InvalidStructure("expected one table per non-unit monoid element");
  }
  Object a;
  std::vector<int> id(static_cast<std::size_t>(size));
  for (int x = 0; x < size; ++x) id[static_cast<std::size_t>(x)] = x;
  a.act.push_back(id);
  for (const auto& t : tables) a.act.push_back(t);
  validate(a);
  return a;
}

MSet::Object MSet::trivial_action(int size) const {
  std::vector<int> id(static_cast<std::size_t>(size));
  for (int x = 0; x < size; ++x) id[static_cast<std::size_t>(x)] = x;
  return Object{std::vector<std::vector<int>>(static_cast<std::size_t>(monoid_.order()), id)};
}

MSet::Object MSet::free_on(int size) const {
  const int m = monoid_.order();
  Object a;
  a.act.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m * size)));
  for (int n = 0; n < m; ++n) {
    for (int k = 0; k < m; ++k) {
      for (int s = 0; s < size; ++s) a.act[n][k * size + s] = monoid_.mul[n][k] * size + s;
    }
  }
  return a;
}

std::vector<MSet::Object> MSet::objects_up_to(int max_size) const {
  std::vector<Object> out;
  const int generators = monoid_.order() - 1;
  for (int n = 0; n <= max_size; ++n) {
    const int cells = generators * n;
    std::vector<int> digits(static_cast<std::size_t>(cells), 0);
    while (true) {
      std::vector<std::vector<int>> tables(static_cast<std::size_t>(generators));
      for (int g = 0; g < generators; ++g) {
        tables[g].assign(digits.begin() + g * n, digits.begin() + (g + 1) * n);
      }
      try {
        out.push_back(object(n, tables));
      } catch (const InvalidStructure&) {
      }
      int pos = cells - 1;
      while (pos >= 0 && digits[pos] == n - 1) digits[pos--] = 0;
      if (pos < 0) break;
      ++digits[pos];
    }
  }
  return out;
}

MSet::Object MSet::initial() const { return Object{std::vector<std::vector<int>>(static_cast<std::size_t>(monoid_.order()))}; }

MSet::Morphism MSet::identity(const Object& a) const { return Morphism(a, a, a.act[0]); }

MSet::Morphism MSet::compose(const Morphism& g, const Morphism& f) const {
  if (f.cod() != g.dom()) throw BoundaryMismatch("compose: cod f = " + describe(f.cod()) + " but dom g = " + describe(g.dom()));
  std::vector<int> t(f.table().size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = g(f(static_cast<int>(x)));
  return Morphism(f.dom(), g.cod(), std::move(t));
}

Coproduct<MSet::Object, MSet::Morphism> MSet::coproduct(const Object& a, const Object& b) const {
  Object sum;
  const int shift = a.size();
  for (std::size_t m = 0; m < a.act.size(); ++m) {
    std::vector<int> row = a.act[m];
    for (int v : b.act[m]) row.push_back(v + shift);
    sum.act.push_back(std::move(row));
  }
  std::vector<int> t1(static_cast<std::size_t>(a.size())), t2(static_cast<std::size_t>(b.size()));
  for (int x = 0; x < a.size(); ++x) t1[x] = x;
  for (int x = 0; x < b.size(); ++x) t2[x] = shift + x;
  return {sum, Morphism(a, sum, std::move(t1)), Morphism(b, sum, std::move(t2))};
}

MSet::Morphism MSet::copair(const Morphism& f, const Morphism& g) const {
  if (f.cod() != g.cod()) throw BoundaryMismatch("copair: codomains " + describe(f.cod()) + " and " + describe(g.cod()));
  std::vector<int> t = f.table();
  t.insert(t.end(), g.table().begin(), g.table().end());
  return Morphism(coproduct(f.dom(), g.dom()).object, f.cod(), std::move(t));
}

MSet::Morphism MSet::morphism(const Object& dom, const Object& cod, std::vector<int> table) const {
  if (static_cast<int>(table.size()) != dom.size()) throw InvalidStructure("table length does not match the domain");
  for (int v : table) {
    if (v < 0 || v >= cod.size()) throw InvalidStructure("table entry outside the codomain");
  }
  for (std::size_t m = 0; m < dom.act.size(); ++m) {
    for (int x = 0; x < dom.size(); ++x) {
      if (table[dom.act[m][x]] != cod.act[m][table[x]]) throw InvalidStructure("table is not equivariant");
    }
  }
  return Morphism(dom, cod, std::move(table));
}

bool MSet::for_each_solution(const HomProblem<Object, Morphism>& problem,
                             const std::function<bool(const Morphism&)>& visit) const {
  const Object& dom = problem.dom;
  const Object& cod = problem.cod;
  for (const auto& [a, b] : problem.pre) {
    if (a.cod() != dom || b.dom() != a.dom() || b.cod() != cod)
      throw BoundaryMismatch("search: pre-constraint does not fit the unknown");
  }
  for (const auto& [c, e] : problem.post) {
    if (c.dom() != cod || e.dom() != dom || e.cod() != c.cod())
      throw BoundaryMismatch("search: post-constraint does not fit the unknown");
  }
  const int n = dom.size();
  const int values = cod.size();
  std::vector<int> val(static_cast<std::size_t>(n), -1);
  std::vector<int> trail;

  // assigns x -> v and everything equivariance forces from it
  auto force = [&](int x0, int v0) {
    std::vector<std::pair<int, int>> queue{{x0, v0}};
    while (!queue.empty()) {
      auto [x, v] = queue.back();
      queue.pop_back();
      if (val[x] != -1) {
        if (val[x] != v) return false;
        continue;
      }
      for (const auto& [c, e] : problem.post) {
        if (c(v) != e(x)) return false;
      }
      val[x] = v;
      trail.push_back(x);
      for (std::size_t m = 1; m < dom.act.size(); ++m) queue.push_back({dom.act[m][x], cod.act[m][v]});
    }
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      val[trail.back()] = -1;
      trail.pop_back();
    }
  };

  for (const auto& [a, b] : problem.pre) {
    for (int x = 0; x < a.dom().size(); ++x) {
      if (!force(a(x), b(x))) return false;
    }
  }

  const bool reverse = options_.order == SearchOrder::reverse;
  std::uint64_t visited = 0;
  std::function<bool(int)> walk = [&](int pos) -> bool {
    while (pos < n && val[pos] != -1) ++pos;
    if (pos == n) {
      if (++visited > options_.cap) throw HomSetTooLarge(visited, "M-set search exceeded cap");
      return !visit(Morphism(dom, cod, val));
    }
    for (int i = 0; i < values; ++i) {
      const int v = reverse ? values - 1 - i : i;
      const std::size_t mark = trail.size();
      if (force(pos, v) && walk(pos + 1)) return true;
      undo(mark);
    }
    return false;
  };
  return walk(0);
}

std::vector<MSet::Morphism> MSet::enumerate_homs(const Object& a, const Object& b) const {
  std::vector<Morphism> out;
  for_each_solution({a, b, {}, {}}, [&](const Morphism& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

bool MSet::is_mono(const Morphism& f) const {
  std::vector<char> seen(static_cast<std::size_t>(f.cod().size()), 0);
  for (int v : f.table()) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool MSet::is_epi(const Morphism& f) const {
  std::vector<char> seen(static_cast<std::size_t>(f.cod().size()), 0);
  for (int v : f.table()) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

MSet::Morphism MSet::free_map(const Morphism& f) const {
  const int m = monoid_.order();
  const int a = f.dom().size(), b = f.cod().size();
  std::vector<int> t(static_cast<std::size_t>(m * a));
  for (int k = 0; k < m; ++k) {
    for (int y = 0; y < a; ++y) t[k * a + y] = k * b + f(y);
  }
  return Morphism(free_on(a), free_on(b), std::move(t));
}

MSet::Morphism MSet::counit(const Object& y) const {
  const int m = monoid_.order();
  const int n = y.size();
  std::vector<int> t(static_cast<std::size_t>(m * n));
  for (int k = 0; k < m; ++k) {
    for (int x = 0; x < n; ++x) t[k * n + x] = y.act[k][x];
  }
  return Morphism(free_on(n), y, std::move(t));
}

MSet::Morphism MSet::comult(const Object& y) const {
  const int m = monoid_.order();
  const int n = y.size();
  const int pn = m * n;
  std::vector<int> t(static_cast<std::size_t>(pn));
  for (int k = 0; k < m; ++k) {
    for (int x = 0; x < n; ++x) t[k * n + x] = k * pn + x;
  }
  return Morphism(free_on(n), free_on(pn), std::move(t));
}

std::string MSet::describe(const Object& a) const {
  if (is_trivial_monoid()) return "set:" + std::to_string(a.size());
  std::string out = "mset:{" + std::to_string(a.size());
  for (std::size_t m = 1; m < a.act.size(); ++m) out += "," + join(a.act[m]);
  return out + "}";
}

std::string MSet::describe(const Morphism& f) const {
  return describe(f.dom()) + "->" + describe(f.cod()) + " " + join(f.table());
}

std::optional<std::string> MSet::first_difference(const Morphism& f, const Morphism& g) const {
  if (f.dom() != g.dom() || f.cod() != g.cod()) return "boundaries differ";
  for (int x = 0; x < f.dom().size(); ++x) {
    if (f(x) != g(x)) {
      return "element " + std::to_string(x) + ": " + std::to_string(f(x)) + " vs " + std::to_string(g(x));
    }
  }
  return std::nullopt;
}

std::vector<int> fixed_point_counts(const MSet& cat, const MSetObject& x) {
  std::vector<int> out;
  for (int m = 0; m < cat.monoid().order(); ++m) {
    int count = 0;
    for (int y = 0; y < x.size(); ++y) count += x.act[m][y] == y;
    out.push_back(count);
  }
  return out;
}

bool is_free_mset(const MSet& cat, const MSetObject& x) {
  const int m = cat.monoid().order();
  if (x.size() % m != 0) return false;
  const auto free = cat.free_on(x.size() / m);
  if (fixed_point_counts(cat, free) != fixed_point_counts(cat, x)) return false;
  bool found = false;
  cat.for_each_solution({free, x, {}, {}}, [&](const MSetMorphism& f) {
    found = cat.is_mono(f);
    return !found;
  });
  return found;
}

}  // namespace wfs
