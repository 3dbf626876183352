#include "wfs/fp.hpp"

#include <algorithm>
#include <limits>

#include "wfs/errors.hpp"

namespace wfs {

SparseVec::SparseVec(Residue p, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (const auto& [i, v] : entries) {
    Residue r = v % p;
    if (!entries_.empty() && entries_.back().first == i) {
      entries_.back().second = add_mod(entries_.back().second, r, p);
    } else {
      entries_.push_back({i, r});
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return e.second == 0; });
}

Residue SparseVec::at(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index key) { return e.first < key; });
  return (it != entries_.end() && it->first == i) ? it->second : 0;
}

Residue inv_mod(Residue a, Residue p) {
  // p is prime: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Residue>(result);
}

LinearMap::LinearMap(Residue p, Index rows, Index cols, std::vector<SparseVec> columns)
    : p_(p), rows_(rows), cols_(cols) {
  if (static_cast<Index>(columns.size()) != cols) throw InvalidStructure("linear map: column count mismatch");
  columns_ = std::make_shared<const std::vector<SparseVec>>(std::move(columns));
}

LinearMap::LinearMap(Residue p, Index rows, Index cols, ColumnFn fn) : p_(p), rows_(rows), cols_(cols) {
  if (cols <= kEagerColumns) {
    std::vector<SparseVec> columns;
    columns.reserve(static_cast<std::size_t>(cols));
    for (Index j = 0; j < cols; ++j) columns.push_back(fn(j));
    columns_ = std::make_shared<const std::vector<SparseVec>>(std::move(columns));
  } else {
    fn_ = std::make_shared<const ColumnFn>(std::move(fn));
  }
}

LinearMap LinearMap::identity(Residue p, Index n) {
  return LinearMap(p, n, n, [](Index j) { return SparseVec::unit(j); });
}

LinearMap LinearMap::zero(Residue p, Index rows, Index cols) {
  return LinearMap(p, rows, cols, [](Index) { return SparseVec{}; });
}

SparseVec LinearMap::column(Index j) const {
  if (columns_) return (*columns_)[static_cast<std::size_t>(j)];
  return (*fn_)(j);
}

SparseVec LinearMap::apply(const SparseVec& x) const {
  const auto& xs = x.entries();
  if (xs.size() == 1 && xs.front().second == 1) return column(xs.front().first);
  std::vector<SparseVec::Entry> acc;
  for (const auto& [j, a] : xs) {
    const SparseVec col = column(j);
    for (const auto& [i, v] : col.entries()) acc.push_back({i, mul_mod(a, v, p_)});
  }
  return SparseVec(p_, std::move(acc));
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (g.cols() != f.rows() || g.prime() != f.prime()) throw BoundaryMismatch("linear map composition");
  return LinearMap(g.prime(), g.rows(), f.cols(), [g, f](Index j) { return g.apply(f.column(j)); });
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  if (a.prime() != b.prime() || a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j) {
    if (a.column(j) != b.column(j)) return false;
  }
  return true;
}

Index rank(const LinearMap& m) {
  const Residue p = m.prime();
  // Reduced columns keyed by their leading index.
  std::vector<SparseVec> basis;
  auto reduce = [&](SparseVec v) {
    bool changed = true;
    while (changed && !v.empty()) {
      changed = false;
      for (const auto& b : basis) {
        const Index lead = b.entries().front().first;
        const Residue c = v.at(lead);
        if (c == 0) continue;
        std::vector<SparseVec::Entry> acc = v.entries();
        for (const auto& [i, val] : b.entries()) acc.push_back({i, mul_mod(p - c, val, p)});
        v = SparseVec(p, std::move(acc));
        changed = true;
      }
    }
    return v;
  };
  for (Index j = 0; j < m.cols(); ++j) {
    SparseVec v = reduce(m.column(j));
    if (v.empty()) continue;
    const Residue s = inv_mod(v.entries().front().second, p);
    std::vector<SparseVec::Entry> scaled;
    for (const auto& [i, val] : v.entries()) scaled.push_back({i, mul_mod(s, val, p)});
    basis.emplace_back(p, std::move(scaled));
  }
  return static_cast<Index>(basis.size());
}

std::optional<AffineSpace> AffineSpace::solve(Residue p, Index unknowns, const std::vector<LinearEquation>& eqs) {
  constexpr Index kMaxUnknowns = Index{1} << 14;
  if (unknowns > kMaxUnknowns) {
    throw HomSetTooLarge(static_cast<std::uint64_t>(unknowns), "linear search with too many unknowns");
  }
  const std::size_t n = static_cast<std::size_t>(unknowns);
  std::vector<std::vector<Residue>> rows;
  std::vector<Residue> rhs;
  rows.reserve(eqs.size());
  for (const auto& eq : eqs) {
    std::vector<Residue> row(n, 0);
    for (const auto& [var, c] : eq.coeffs) row[static_cast<std::size_t>(var)] = add_mod(row[static_cast<std::size_t>(var)], c % p, p);
    rows.push_back(std::move(row));
    rhs.push_back(eq.rhs % p);
  }

  std::vector<bool> used(rows.size(), false);
  std::vector<std::ptrdiff_t> pivot_row(n, -1);
  for (std::size_t v = n; v-- > 0;) {
    std::size_t r = 0;
    while (r < rows.size() && (used[r] || rows[r][v] == 0)) ++r;
    if (r == rows.size()) continue;
    used[r] = true;
    pivot_row[v] = static_cast<std::ptrdiff_t>(r);
    const Residue s = inv_mod(rows[r][v], p);
    for (std::size_t k = 0; k <= v; ++k) rows[r][k] = mul_mod(rows[r][k], s, p);
    rhs[r] = mul_mod(rhs[r], s, p);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][v] == 0) continue;
      const Residue c = rows[o][v];
      for (std::size_t k = 0; k <= v; ++k) {
        if (rows[r][k] != 0) rows[o][k] = sub_mod(rows[o][k], mul_mod(c, rows[r][k], p), p);
      }
      rhs[o] = sub_mod(rhs[o], mul_mod(c, rhs[r], p), p);
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!used[r] && rhs[r] != 0) return std::nullopt;
  }

  AffineSpace space;
  space.p_ = p;
  space.n_ = unknowns;
  std::vector<Index> slot(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    if (pivot_row[v] < 0) {
      slot[v] = static_cast<Index>(space.free_.size());
      space.free_.push_back(static_cast<Index>(v));
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (pivot_row[v] < 0) continue;
    const auto& row = rows[static_cast<std::size_t>(pivot_row[v])];
    Pivot piv{static_cast<Index>(v), rhs[static_cast<std::size_t>(pivot_row[v])], {}};
    for (std::size_t u = 0; u < v; ++u) {
      if (row[u] != 0) piv.free_terms.push_back({slot[u], row[u]});
    }
    space.pivots_.push_back(std::move(piv));
  }
  return space;
}

std::uint64_t AffineSpace::size() const noexcept {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < free_.size(); ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / p_) return std::numeric_limits<std::uint64_t>::max();
    total *= p_;
  }
  return total;
}

void AffineSpace::assemble(const std::vector<Residue>& free_values, std::vector<Residue>& x) const {
  x.assign(static_cast<std::size_t>(n_), 0);
  for (std::size_t k = 0; k < free_.size(); ++k) x[static_cast<std::size_t>(free_[k])] = free_values[k];
  for (const auto& piv : pivots_) {
    Residue v = piv.rhs;
    for (const auto& [s, c] : piv.free_terms) v = sub_mod(v, mul_mod(c, free_values[static_cast<std::size_t>(s)], p_), p_);
    x[static_cast<std::size_t>(piv.var)] = v;
  }
}

bool AffineSpace::enumerate(bool reverse, const std::function<bool(const std::vector<Residue>&)>& visit) const {
  const std::size_t k = free_.size();
  const Residue start = reverse ? p_ - 1 : 0;
  std::vector<Residue> odo(k, start);
  std::vector<Residue> x;
  while (true) {
    assemble(odo, x);
    if (!visit(x)) return true;
    // advance: last free unknown is least significant
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (!reverse && odo[i] + 1 < p_) {
        ++odo[i];
        break;
      }
      if (reverse && odo[i] > 0) {
        --odo[i];
        break;
      }
      odo[i] = start;
      if (i == 0) return false;
    }
    if (k == 0) return false;
  }
}

}  // namespace wfs
