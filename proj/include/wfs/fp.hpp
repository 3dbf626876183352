#pragma once

// Linear algebra over a prime field F_p with sparse columns. Vector spaces of
// dimension up to 2^63 are allowed as long as only a few columns are touched.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace wfs {

using Index = std::int64_t;
using Residue = std::uint32_t;

/// Sparse vector over F_p. Entries are strictly increasing in index and nonzero.
class SparseVec {
 public:
  using Entry = std::pair<Index, Residue>;

  SparseVec() = default;
  /// Sorts, merges duplicates and drops zeros (values reduced mod p).
  SparseVec(Residue p, std::vector<Entry> entries);

  static SparseVec unit(Index i) {
    SparseVec v;
    v.entries_.push_back({i, 1});
    return v;
  }

  const std::vector<Entry>& entries() const& noexcept { return entries_; }
  // by value on temporaries, so `for (auto e : m.column(j).entries())` is safe
  std::vector<Entry> entries() && noexcept { return std::move(entries_); }
  bool empty() const noexcept { return entries_.empty(); }
  Residue at(Index i) const;

  friend bool operator==(const SparseVec&, const SparseVec&) = default;
  friend auto operator<=>(const SparseVec&, const SparseVec&) = default;

 private:
  std::vector<Entry> entries_;
};

/// A linear map F_p^cols -> F_p^rows stored column by column. Columns are either
/// materialized or produced on demand by a function (for very wide domains).
class LinearMap {
 public:
  using ColumnFn = std::function<SparseVec(Index)>;

  /// Column functions over at most this many columns are materialized eagerly.
  static constexpr Index kEagerColumns = Index{1} << 12;

  LinearMap() = default;
  LinearMap(Residue p, Index rows, Index cols, std::vector<SparseVec> columns);
  LinearMap(Residue p, Index rows, Index cols, ColumnFn fn);

  static LinearMap identity(Residue p, Index n);
  static LinearMap zero(Residue p, Index rows, Index cols);

  Residue prime() const noexcept { return p_; }
  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }
  bool is_lazy() const noexcept { return columns_ == nullptr; }

  SparseVec column(Index j) const;
  SparseVec apply(const SparseVec& x) const;

 private:
  Residue p_ = 2;
  Index rows_ = 0;
  Index cols_ = 0;
  std::shared_ptr<const std::vector<SparseVec>> columns_;
  std::shared_ptr<const ColumnFn> fn_;
};

LinearMap compose(const LinearMap& g, const LinearMap& f);
bool operator==(const LinearMap& a, const LinearMap& b);
/// Rank by column elimination; the map must have a materializable number of columns.
Index rank(const LinearMap& m);

/// Arithmetic helpers mod p.
inline Residue add_mod(Residue a, Residue b, Residue p) { return static_cast<Residue>((std::uint64_t{a} + b) % p); }
inline Residue sub_mod(Residue a, Residue b, Residue p) { return static_cast<Residue>((std::uint64_t{a} + p - b) % p); }
inline Residue mul_mod(Residue a, Residue b, Residue p) { return static_cast<Residue>((std::uint64_t{a} * b) % p); }
Residue inv_mod(Residue a, Residue p);

struct LinearEquation {
  std::vector<std::pair<Index, Residue>> coeffs;
  Residue rhs = 0;
};

/// Solution set of a linear system over F_p in unknowns x_0..x_{n-1}.
///
/// Elimination pivots on the highest-index unknown of every row, so each pivot
/// unknown is an affine function of free unknowns with smaller index. Walking the
/// free unknowns as an odometer therefore lists solutions in lexicographic order.
class AffineSpace {
 public:
  /// Returns nullopt when the system is inconsistent.
  static std::optional<AffineSpace> solve(Residue p, Index unknowns, const std::vector<LinearEquation>& eqs);

  Residue prime() const noexcept { return p_; }
  Index unknowns() const noexcept { return n_; }
  Index free_count() const noexcept { return static_cast<Index>(free_.size()); }
  /// p^free_count, saturating at UINT64_MAX.
  std::uint64_t size() const noexcept;

  /// Fills x with the solution whose free unknowns take the given values.
  void assemble(const std::vector<Residue>& free_values, std::vector<Residue>& x) const;

  /// Visits solutions in lexicographic (or reverse lexicographic) order until the
  /// visitor returns false. Returns true if the visitor stopped the walk.
  bool enumerate(bool reverse, const std::function<bool(const std::vector<Residue>&)>& visit) const;

 private:
  struct Pivot {
    Index var;
    Residue rhs;
    std::vector<std::pair<Index, Residue>> free_terms;  // (free slot, coefficient)
  };
  Residue p_ = 2;
  Index n_ = 0;
  std::vector<Index> free_;
  std::vector<Pivot> pivots_;
};

}  // namespace wfs
