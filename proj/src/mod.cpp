#include "wfs/mod.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

namespace wfs {

namespace {

std::optional<Index> checked_mul(Index a, Index b) {
  Index out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<Index> checked_pow(Index base, Index exp) {
  Index out = 1;
  for (Index i = 0; i < exp; ++i) {
    auto next = checked_mul(out, base);
    if (!next) return std::nullopt;
    out = *next;
  }
  return out;
}

}  // namespace

std::vector<int> ModObject::factors() const {
  std::vector<int> out;
  for (const auto& [d, c] : groups) out.insert(out.end(), static_cast<std::size_t>(c), d);
  return out;
}

Index ModObject::coordinate_count() const {
  Index total = 0;
  for (const auto& g : groups) total += g.second;
  return total;
}

ModMorphism::ModMorphism(ModObject dom, ModObject cod, std::vector<LinearMap> parts)
    : dom_(std::move(dom)), cod_(std::move(cod)), parts_(std::move(parts)) {}

bool operator==(const ModMorphism& a, const ModMorphism& b) {
  if (a.dom_ != b.dom_ || a.cod_ != b.cod_ || a.parts_.size() != b.parts_.size()) return false;
  for (std::size_t i = 0; i < a.parts_.size(); ++i) {
    if (!(a.parts_[i] == b.parts_[i])) return false;
  }
  return true;
}

Mod::Mod(int n, SearchOptions options) : n_(n), options_(options) {
  if (n < 2) throw UnsupportedRing("modulus must be at least 2");
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) throw UnsupportedRing("modulus " + std::to_string(n) + " is not squarefree");
    primes_.push_back(static_cast<Residue>(p));
  }
  if (m > 1) primes_.push_back(static_cast<Residue>(m));
}

Mod::Object Mod::module(std::vector<int> factors) const {
  std::map<int, Index> counts;
  for (int d : factors) {
    if (d <= 1 || n_ % d != 0) {
      throw InvalidStructure("factor " + std::to_string(d) + " is not a divisor > 1 of " + std::to_string(n_));
    }
    ++counts[d];
  }
  Object out{n_, {}};
  for (const auto& [d, c] : counts) out.groups.push_back({d, c});
  return out;
}

Mod::Object Mod::free_module(Index rank) const {
  Object out{n_, {}};
  if (rank > 0) out.groups.push_back({n_, rank});
  return out;
}

Mod::Object Mod::from_dims(const std::vector<Index>& dims) const {
  const Index top = dims.empty() ? 0 : *std::max_element(dims.begin(), dims.end());
  std::map<int, Index> counts;
  for (Index j = 1; j <= top; ++j) {
    int d = 1;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (dims[i] >= j) d *= static_cast<int>(primes_[i]);
    }
    ++counts[d];
  }
  Object out{n_, {}};
  for (const auto& [d, c] : counts) out.groups.push_back({d, c});
  return out;
}

Index Mod::dim(const Object& a, std::size_t prime_index) const {
  const Residue p = primes_[prime_index];
  Index total = 0;
  for (const auto& [d, c] : a.groups) {
    if (d % static_cast<int>(p) == 0) total += c;
  }
  return total;
}

std::vector<Index> Mod::dims(const Object& a) const {
  std::vector<Index> out;
  for (std::size_t i = 0; i < primes_.size(); ++i) out.push_back(dim(a, i));
  return out;
}

std::optional<Index> Mod::cardinality(const Object& a) const {
  Index total = 1;
  for (const auto& [d, c] : a.groups) {
    auto pw = checked_pow(d, c);
    if (!pw) return std::nullopt;
    auto next = checked_mul(total, *pw);
    if (!next) return std::nullopt;
    total = *next;
  }
  return total;
}

std::vector<Mod::Object> Mod::modules_up_to(Index max_size) const {
  std::vector<int> divisors;
  for (int d = 2; d <= n_; ++d) {
    if (n_ % d == 0) divisors.push_back(d);
  }
  std::vector<std::vector<int>> found;
  std::vector<int> current;
  std::function<void(std::size_t, Index)> walk = [&](std::size_t from, Index size) {
    found.push_back(current);
    for (std::size_t i = from; i < divisors.size(); ++i) {
      if (size * divisors[i] > max_size) continue;
      current.push_back(divisors[i]);
      walk(i, size * divisors[i]);
      current.pop_back();
    }
  };
  if (max_size >= 1) walk(0, 1);
  std::vector<Object> out;
  for (const auto& fs : found) out.push_back(module(fs));
  std::stable_sort(out.begin(), out.end(), [&](const Object& a, const Object& b) {
    const Index ca = *cardinality(a), cb = *cardinality(b);
    if (ca != cb) return ca < cb;
    return a.factors() < b.factors();
  });
  return out;
}

Index Mod::position_of_coordinate(const Object& a, Index coordinate, std::size_t prime_index) const {
  const int p = static_cast<int>(primes_[prime_index]);
  Index start = 0, pos = 0;
  for (const auto& [d, c] : a.groups) {
    if (coordinate < start + c) return pos + (coordinate - start);
    if (d % p == 0) pos += c;
    start += c;
  }
  throw DomainMismatch("coordinate out of range");
}

Index Mod::crt(int divisor, const std::vector<Residue>& per_prime) const {
  Index r = 0;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    const int p = static_cast<int>(primes_[i]);
    if (divisor % p != 0) continue;
    const Index rest = divisor / p;
    const Index e = rest * inv_mod(static_cast<Residue>(rest % p), static_cast<Residue>(p));
    r = (r + static_cast<Index>(per_prime[i]) * e) % divisor;
  }
  return r;
}

Mod::Element Mod::element_from_residues(const Object& a, const std::vector<Index>& residues) const {
  Element x;
  for (std::size_t pi = 0; pi < primes_.size(); ++pi) {
    const int p = static_cast<int>(primes_[pi]);
    std::vector<SparseVec::Entry> entries;
    Index coord = 0, pos = 0;
    for (const auto& [d, c] : a.groups) {
      for (Index t = 0; t < c; ++t, ++coord) {
        if (d % p != 0) continue;
        const Index v = residues[static_cast<std::size_t>(coord)] % p;
        if (v != 0) entries.push_back({pos, static_cast<Residue>(v)});
        ++pos;
      }
    }
    x.parts.emplace_back(static_cast<Residue>(p), std::move(entries));
  }
  return x;
}

std::vector<Index> Mod::residues_of(const Object& a, const Element& x) const {
  const Index coords = a.coordinate_count();
  std::vector<Index> residues(static_cast<std::size_t>(coords), 0);
  std::vector<Residue> per_prime(primes_.size(), 0);
  Index coord = 0;
  std::vector<Index> pos(primes_.size(), 0);
  for (const auto& [d, c] : a.groups) {
    for (Index t = 0; t < c; ++t, ++coord) {
      for (std::size_t pi = 0; pi < primes_.size(); ++pi) {
        if (d % static_cast<int>(primes_[pi]) != 0) {
          per_prime[pi] = 0;
          continue;
        }
        per_prime[pi] = x.parts[pi].at(pos[pi]++);
      }
      residues[static_cast<std::size_t>(coord)] = crt(d, per_prime);
    }
  }
  return residues;
}

Mod::Element Mod::element_at(const Object& a, Index index) const {
  const auto card = cardinality(a);
  if (!card) throw ObjectTooLarge("element_at on a module with more than 2^63 elements");
  if (index < 0 || index >= *card) throw DomainMismatch("element index out of range");
  const auto fs = a.factors();
  std::vector<Index> residues(fs.size(), 0);
  for (std::size_t c = fs.size(); c-- > 0;) {
    residues[c] = index % fs[c];
    index /= fs[c];
  }
  return element_from_residues(a, residues);
}

Index Mod::index_of(const Object& a, const Element& x) const {
  if (!cardinality(a)) throw ObjectTooLarge("index_of on a module with more than 2^63 elements");
  const auto fs = a.factors();
  const auto residues = residues_of(a, x);
  Index idx = 0;
  for (std::size_t c = 0; c < fs.size(); ++c) idx = idx * fs[c] + residues[c];
  return idx;
}

Mod::Element Mod::apply(const Morphism& f, const Element& x) const {
  Element out;
  for (std::size_t pi = 0; pi < primes_.size(); ++pi) out.parts.push_back(f.parts()[pi].apply(x.parts[pi]));
  return out;
}

Mod::Morphism Mod::identity(const Object& a) const {
  std::vector<LinearMap> parts;
  for (std::size_t pi = 0; pi < primes_.size(); ++pi) parts.push_back(LinearMap::identity(primes_[pi], dim(a, pi)));
  return Morphism(a, a, std::move(parts));
}

Mod::Morphism Mod::zero(const Object& a, const Object& b) const {
  std::vector<LinearMap> parts;
  for (std::size_t pi = 0; pi < primes_.size(); ++pi) parts.push_back(LinearMap::zero(primes_[pi], dim(b, pi), dim(a, pi)));
  return Morphism(a, b, std::move(parts));
}

Mod::Morphism Mod::compose(const Morphism& g, const Morphism& f) const {
  if (f.cod() != g.dom()) throw BoundaryMismatch("compose: cod f = " + describe(f.cod()) + " but dom g = " + describe(g.dom()));
  std::vector<LinearMap> parts;
  for (std::size_t pi = 0; pi < primes_.size(); ++pi) parts.push_back(wfs::compose(g.parts()[pi], f.parts()[pi]));
  return Morphism(f.dom(), g.cod(), std::move(parts));
}

std::vector<Mod::Segment> Mod::segments(const Object& a, const Object& b, std::size_t prime_index) const {
  const int p = static_cast<int>(primes_[prime_index]);
  std::map<int, std::pair<Index, Index>> counts;  // divisor -> (count in a, count in b)
  for (const auto& [d, c] : a.groups) counts[d].first = c;
  for (const auto& [d, c] : b.groups) counts[d].second = c;
  std::vector<Segment> out;
  Index a_pos = 0, b_pos = 0, comb = 0;
  for (const auto& [d, cs] : counts) {
    if (d % p != 0) continue;
    out.push_back({a_pos, cs.first, b_pos, cs.second, comb});
    a_pos += cs.first;
    b_pos += cs.second;
    comb += cs.first + cs.second;
  }
  return out;
}

Coproduct<Mod::Object, Mod::Morphism> Mod::coproduct(const Object& a, const Object& b) const {
  std::map<int, Index> counts;
  for (const auto& [d, c] : a.groups) counts[d] += c;
  for (const auto& [d, c] : b.groups) counts[d] += c;
  Object sum{n_, {}};
  for (const auto& [d, c] : counts) sum.groups.push_back({d, c});

  std::vector<LinearMap> inj1, inj2;
  for (std::size_t pi = 0; pi < primes_.size(); ++pi) {
    const auto segs = segments(a, b, pi);
    const Residue p = primes_[pi];
    const Index rows = dim(sum, pi);
    inj1.emplace_back(p, rows, dim(a, pi), [segs](Index i) {
      for (const auto& s : segs) {
        if (i < s.a_start + s.a_count) return SparseVec::unit(s.comb_start + (i - s.a_start));
      }
      throw DomainMismatch("inj1 column out of range");
    });
    inj2.emplace_back(p, rows, dim(b, pi), [segs](Index i) {
      for (const auto& s : segs) {
        if (i < s.b_start + s.b_count) return SparseVec::unit(s.comb_start + s.a_count + (i - s.b_start));
      }
      throw DomainMismatch("inj2 column out of range");
    });
  }
  return {sum, Morphism(a, sum, std::move(inj1)), Morphism(b, sum, std::move(inj2))};
}

Mod::Morphism Mod::copair(const Morphism& f, const Morphism& g) const {
  if (f.cod() != g.cod()) throw BoundaryMismatch("copair: codomains " + describe(f.cod()) + " and " + describe(g.cod()));
  const Object sum = coproduct(f.dom(), g.dom()).object;
  std::vector<LinearMap> parts;
  for (std::size_t pi = 0; pi < primes_.size(); ++pi) {
    const auto segs = segments(f.dom(), g.dom(), pi);
    const LinearMap fm = f.parts()[pi], gm = g.parts()[pi];
    parts.emplace_back(primes_[pi], dim(f.cod(), pi), dim(sum, pi), [segs, fm, gm](Index j) {
      for (const auto& s : segs) {
        if (j >= s.comb_start + s.a_count + s.b_count) continue;
        const Index off = j - s.comb_start;
        return off < s.a_count ? fm.column(s.a_start + off) : gm.column(s.b_start + off - s.a_count);
      }
      throw DomainMismatch("copair column out of range");
    });
  }
  return Morphism(sum, f.cod(), std::move(parts));
}

bool Mod::for_each_solution(const HomProblem<Object, Morphism>& problem,
                            const std::function<bool(const Morphism&)>& visit) const {
  for (const auto& [a, b] : problem.pre) {
    if (a.cod() != problem.dom || b.dom() != a.dom() || b.cod() != problem.cod)
      throw BoundaryMismatch("search: pre-constraint does not fit the unknown");
  }
  for (const auto& [c, e] : problem.post) {
    if (c.dom() != problem.cod || e.dom() != problem.dom || e.cod() != c.cod())
      throw BoundaryMismatch("search: post-constraint does not fit the unknown");
  }
  const std::size_t k = primes_.size();
  std::vector<AffineSpace> spaces;
  std::vector<Index> rows(k), cols(k);
  for (std::size_t pi = 0; pi < k; ++pi) {
    rows[pi] = dim(problem.cod, pi);
    cols[pi] = dim(problem.dom, pi);
    std::vector<std::pair<LinearMap, LinearMap>> pre, post;
    for (const auto& [a, b] : problem.pre) pre.push_back({a.parts()[pi], b.parts()[pi]});
    for (const auto& [c, e] : problem.post) post.push_back({c.parts()[pi], e.parts()[pi]});
    auto space = AffineSpace::solve(primes_[pi], rows[pi] * cols[pi], hom_equations(rows[pi], cols[pi], pre, post));
    if (!space) return false;
    spaces.push_back(std::move(*space));
  }
  const bool reverse = options_.order == SearchOrder::reverse;
  std::vector<LinearMap> parts(k);
  std::uint64_t visited = 0;
  std::function<bool(std::size_t)> walk = [&](std::size_t pi) -> bool {
    if (pi == k) {
      if (++visited > options_.cap) throw HomSetTooLarge(visited, "module search exceeded cap");
      return !visit(Morphism(problem.dom, problem.cod, parts));
    }
    return spaces[pi].enumerate(reverse, [&](const std::vector<Residue>& x) {
      parts[pi] = matrix_from_entries(primes_[pi], rows[pi], cols[pi], x);
      return !walk(pi + 1);
    });
  };
  return walk(0);
}

std::uint64_t Mod::hom_count(const Object& a, const Object& b) const {
  std::uint64_t total = 1;
  for (std::size_t pi = 0; pi < primes_.size(); ++pi) {
    const Index e = dim(a, pi) * dim(b, pi);
    for (Index i = 0; i < e; ++i) {
      if (total > std::numeric_limits<std::uint64_t>::max() / primes_[pi]) return std::numeric_limits<std::uint64_t>::max();
      total *= primes_[pi];
    }
  }
  return total;
}

std::vector<Mod::Morphism> Mod::enumerate_homs(const Object& a, const Object& b) const {
  const auto count = hom_count(a, b);
  if (count > options_.cap) throw HomSetTooLarge(count, "Hom(" + describe(a) + ", " + describe(b) + ")");
  std::vector<Morphism> out;
  for_each_solution({a, b, {}, {}}, [&](const Morphism& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

bool Mod::is_mono(const Morphism& f) const {
  for (const auto& part : f.parts()) {
    if (rank(part) != part.cols()) return false;
  }
  return true;
}

bool Mod::is_epi(const Morphism& f) const {
  for (const auto& part : f.parts()) {
    if (rank(part) != part.rows()) return false;
  }
  return true;
}

Mod::Morphism Mod::from_matrix(const Object& dom, const Object& cod, const std::vector<std::vector<Index>>& a) const {
  const auto ds = dom.factors();
  const auto es = cod.factors();
  if (a.size() != es.size()) throw InvalidStructure("matrix must have one row per codomain factor");
  for (std::size_t j = 0; j < es.size(); ++j) {
    if (a[j].size() != ds.size()) throw InvalidStructure("matrix must have one column per domain factor");
    for (std::size_t i = 0; i < ds.size(); ++i) {
      const Index v = a[j][i];
      if (v < 0 || v >= es[j]) throw InvalidStructure("matrix entry is not a least non-negative residue");
      if ((static_cast<Index>(ds[i]) * v) % es[j] != 0) {
        throw InvalidStructure("matrix entry violates d_i * a_ji = 0 (mod e_j)");
      }
    }
  }
  std::vector<LinearMap> parts;
  for (std::size_t pi = 0; pi < primes_.size(); ++pi) {
    const int p = static_cast<int>(primes_[pi]);
    std::vector<SparseVec> columns;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      if (ds[i] % p != 0) continue;
      std::vector<SparseVec::Entry> entries;
      Index row = 0;
      for (std::size_t j = 0; j < es.size(); ++j) {
        if (es[j] % p != 0) continue;
        const Index v = a[j][i] % p;
        if (v != 0) entries.push_back({row, static_cast<Residue>(v)});
        ++row;
      }
      columns.emplace_back(static_cast<Residue>(p), std::move(entries));
    }
    parts.emplace_back(static_cast<Residue>(p), dim(cod, pi), dim(dom, pi), std::move(columns));
  }
  return Morphism(dom, cod, std::move(parts));
}

std::vector<std::vector<Index>> Mod::to_matrix(const Morphism& f) const {
  const auto ds = f.dom().factors();
  const auto es = f.cod().factors();
  std::vector<std::vector<Index>> a(es.size(), std::vector<Index>(ds.size(), 0));
  for (std::size_t i = 0; i < ds.size(); ++i) {
    std::vector<SparseVec> cols(primes_.size());
    for (std::size_t pi = 0; pi < primes_.size(); ++pi) {
      if (ds[i] % static_cast<int>(primes_[pi]) == 0) {
        cols[pi] = f.parts()[pi].column(position_of_coordinate(f.dom(), static_cast<Index>(i), pi));
      }
    }
    Element image{cols};
    const auto residues = residues_of(f.cod(), image);
    for (std::size_t j = 0; j < es.size(); ++j) a[j][i] = residues[j];
  }
  return a;
}

Mod::Object Mod::free_object(const Object& y) const {
  const auto card = cardinality(y);
  if (!card) throw ObjectTooLarge("free module on a set with more than 2^63 elements");
  return free_module(*card);
}

Mod::Morphism Mod::counit(const Object& y) const {
  const Object py = free_object(y);
  std::vector<LinearMap> parts;
  for (std::size_t pi = 0; pi < primes_.size(); ++pi) {
    parts.emplace_back(primes_[pi], dim(y, pi), dim(py, pi),
                       [self = *this, y, pi](Index k) { return self.element_at(y, k).parts[pi]; });
  }
  return Morphism(py, y, std::move(parts));
}

Mod::Morphism Mod::comult(const Object& y) const {
  const Object py = free_object(y);
  const Object ppy = free_object(py);  // throws when |PY| overflows
  const Index rank_py = py.coordinate_count();
  // basis vector k of PY has index n^(rank_py - 1 - k)
  std::vector<Index> powers(static_cast<std::size_t>(rank_py), 1);
  for (Index k = rank_py - 1; k-- > 0;) powers[static_cast<std::size_t>(k)] = powers[static_cast<std::size_t>(k + 1)] * n_;
  std::vector<LinearMap> parts;
  for (std::size_t pi = 0; pi < primes_.size(); ++pi) {
    parts.emplace_back(primes_[pi], dim(ppy, pi), dim(py, pi),
                       [powers](Index k) { return SparseVec::unit(powers[static_cast<std::size_t>(k)]); });
  }
  return Morphism(py, ppy, std::move(parts));
}

Mod::Morphism Mod::free_map(const Morphism& f) const {
  const Object pa = free_object(f.dom());
  const Object pb = free_object(f.cod());
  std::vector<LinearMap> parts;
  for (std::size_t pi = 0; pi < primes_.size(); ++pi) {
    parts.emplace_back(primes_[pi], dim(pb, pi), dim(pa, pi), [self = *this, f](Index k) {
      return SparseVec::unit(self.index_of(f.cod(), self.apply(f, self.element_at(f.dom(), k))));
    });
  }
  return Morphism(pa, pb, std::move(parts));
}

Vect Mod::component(std::size_t prime_index) const { return Vect(primes_[prime_index], options_); }

VectMorphism Mod::component_of(const Morphism& f, std::size_t prime_index) const {
  const Residue p = primes_[prime_index];
  return VectMorphism({p, dim(f.dom(), prime_index)}, {p, dim(f.cod(), prime_index)}, f.parts()[prime_index]);
}

Mod::Morphism Mod::assemble(const Object& dom, const Object& cod, const std::vector<VectMorphism>& parts) const {
  std::vector<LinearMap> maps;
  for (std::size_t pi = 0; pi < primes_.size(); ++pi) {
    if (parts[pi].dom().dim != dim(dom, pi) || parts[pi].cod().dim != dim(cod, pi)) {
      throw BoundaryMismatch("assemble: component shape does not match");
    }
    maps.push_back(parts[pi].matrix());
  }
  return Morphism(dom, cod, std::move(maps));
}

std::string Mod::describe(const Object& a) const {
  std::ostringstream os;
  os << "zmod" << n_ << ":[";
  bool first = true;
  for (const auto& [d, c] : a.groups) {
    if (c > 8) {
      os << (first ? "" : ",") << d << "^" << c;
      first = false;
      continue;
    }
    for (Index t = 0; t < c; ++t) {
      os << (first ? "" : ",") << d;
      first = false;
    }
  }
  os << "]";
  return os.str();
}

std::string Mod::describe(const Morphism& f) const {
  std::ostringstream os;
  os << describe(f.dom()) << "->" << describe(f.cod());
  const Index cols = f.dom().coordinate_count(), rows = f.cod().coordinate_count();
  if (cols > 0 && rows > 0 && cols <= 16 && rows <= 16) {
    const auto a = to_matrix(f);
    os << " [";
    for (std::size_t j = 0; j < a.size(); ++j) {
      os << (j ? ";" : "");
      for (std::size_t i = 0; i < a[j].size(); ++i) os << (i ? "," : "") << a[j][i];
    }
    os << "]";
  }
  return os.str();
}

std::optional<std::string> Mod::first_difference(const Morphism& f, const Morphism& g) const {
  if (f.dom() != g.dom() || f.cod() != g.cod()) return "boundaries differ";
  for (std::size_t pi = 0; pi < primes_.size(); ++pi) {
    for (Index j = 0; j < f.parts()[pi].cols(); ++j) {
      if (f.parts()[pi].column(j) != g.parts()[pi].column(j)) {
        return "mod-" + std::to_string(primes_[pi]) + " basis vector " + std::to_string(j);
      }
    }
  }
  return std::nullopt;
}

Mod::Object tensor_prime(const Mod& cat, const Mod::Object& m, Residue q) {
  const auto& ps = cat.primes();
  auto it = std::find(ps.begin(), ps.end(), q);
  if (it == ps.end()) throw UnsupportedRing("tensor with Z/" + std::to_string(q) + ": not a prime factor of the modulus");
  std::vector<Index> dims(ps.size(), 0);
  const auto qi = static_cast<std::size_t>(it - ps.begin());
  dims[qi] = cat.dim(m, qi);
  return cat.from_dims(dims);
}

Mod::Morphism tensor_prime(const Mod& cat, const Mod::Morphism& f, Residue q) {
  const auto dom = tensor_prime(cat, f.dom(), q);
  const auto cod = tensor_prime(cat, f.cod(), q);
  std::vector<VectMorphism> parts;
  for (std::size_t pi = 0; pi < cat.primes().size(); ++pi) {
    if (cat.primes()[pi] == q) {
      parts.push_back(cat.component_of(f, pi));
    } else {
      const Residue p = cat.primes()[pi];
      parts.emplace_back(VectObject{p, 0}, VectObject{p, 0}, LinearMap::zero(p, 0, 0));
    }
  }
  return cat.assemble(dom, cod, parts);
}

bool is_free_module(const Mod& cat, const Mod::Object& m) {
  const auto ds = cat.dims(m);
  return std::adjacent_find(ds.begin(), ds.end(), std::not_equal_to<>()) == ds.end();
}

bool is_free_module_by_search(const Mod& cat, const Mod::Object& m) {
  const auto card = cat.cardinality(m);
  if (!card) throw ObjectTooLarge("is_free_module_by_search");
  Index rank = 0, size = 1;
  while (size < *card) {
    size *= cat.modulus();
    ++rank;
  }
  if (size != *card) return false;
  const auto free = cat.free_module(rank);
  bool found = false;
  cat.for_each_solution({free, m, {}, {}}, [&](const Mod::Morphism& f) {
    found = cat.is_mono(f) && cat.is_epi(f);
    return !found;
  });
  return found;
}

bool is_projective_module(const Mod& cat, const Mod::Object& m) {
  const auto eval = cat.counit(m);
  ProblemOf<Mod> problem{m, eval.dom(), {}, {{eval, cat.identity(m)}}};
  return first_solution(cat, problem).has_value();
}

Mod::Object cokernel(const Mod& cat, const Mod::Morphism& f) {
  std::vector<Index> dims;
  for (std::size_t pi = 0; pi < cat.primes().size(); ++pi) {
    dims.push_back(cat.dim(f.cod(), pi) - rank(f.parts()[pi]));
  }
  return cat.from_dims(dims);
}

bool has_no_torsion(const Mod& cat, const Mod::Object& m, Residue q) {
  const auto& ps = cat.primes();
  auto it = std::find(ps.begin(), ps.end(), q);
  if (it == ps.end()) return true;
  return cat.dim(m, static_cast<std::size_t>(it - ps.begin())) == 0;
}

}  // namespace wfs
