#include <doctest.h>

#include <random>
#include <set>

#include "wfs/analysis.hpp"
#include "wfs/vect.hpp"

using namespace wfs;

namespace {

using Dense = std::vector<std::vector<Residue>>;  // [row][col]

Dense random_dense(std::mt19937& rng, Residue p, Index rows, Index cols) {
  std::uniform_int_distribution<Residue> d(0, p - 1);
  Dense a(static_cast<std::size_t>(rows), std::vector<Residue>(static_cast<std::size_t>(cols)));
  for (auto& row : a) {
    for (auto& x : row) x = d(rng);
  }
  return a;
}

LinearMap to_map(Residue p, const Dense& a, Index rows, Index cols) {
  std::vector<Residue> x;
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) x.push_back(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return matrix_from_entries(p, rows, cols, x);
}

Dense to_dense(const LinearMap& m) {
  Dense a(static_cast<std::size_t>(m.rows()), std::vector<Residue>(static_cast<std::size_t>(m.cols())));
  for (Index j = 0; j < m.cols(); ++j) {
    for (const auto& [i, v] : m.column(j).entries()) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
  }
  return a;
}

Dense dense_product(Residue p, const Dense& g, const Dense& f, Index n, Index k, Index m) {
  Dense out(static_cast<std::size_t>(n), std::vector<Residue>(static_cast<std::size_t>(m)));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < m; ++j) {
      std::uint64_t s = 0;
      for (Index t = 0; t < k; ++t) s += std::uint64_t{g[i][t]} * f[t][j];
      out[i][j] = static_cast<Residue>(s % p);
    }
  }
  return out;
}

/// Size of the image, by applying the map to every vector of the domain.
std::size_t image_size(Residue p, const Dense& a, Index rows, Index cols) {
  std::set<std::vector<Residue>> image;
  std::vector<Residue> x(static_cast<std::size_t>(cols), 0);
  while (true) {
    std::vector<Residue> y(static_cast<std::size_t>(rows), 0);
    for (Index i = 0; i < rows; ++i) {
      std::uint64_t s = 0;
      for (Index j = 0; j < cols; ++j) s += std::uint64_t{a[i][j]} * x[j];
      y[i] = static_cast<Residue>(s % p);
    }
    image.insert(y);
    Index c = 0;
    while (c < cols && x[c] == p - 1) x[c++] = 0;
    if (c == cols) break;
    ++x[c];
  }
  return image.size();
}

std::uint64_t power(std::uint64_t b, Index e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("sparse vectors normalize entries") {
  const SparseVec v(5, {{3, 7}, {1, 2}, {3, 3}, {0, 10}});
  REQUIRE(v.entries().size() == 1);
  CHECK(v.entries()[0] == SparseVec::Entry{1, 2});
  CHECK(v.at(3) == 0);
  CHECK(v.at(1) == 2);
}

TEST_CASE("modular inverses") {
  for (Residue p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (Residue a = 1; a < p; ++a) CHECK(mul_mod(a, inv_mod(a, p), p) == 1);
  }
}

TEST_CASE("composition agrees with dense matrix products") {
  std::mt19937 rng(7);
  for (Residue p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<Index> dim(0, 4);
      const Index n = dim(rng), k = dim(rng), m = dim(rng);
      const Dense g = random_dense(rng, p, n, k);
      const Dense f = random_dense(rng, p, k, m);
      CHECK(to_dense(compose(to_map(p, g, n, k), to_map(p, f, k, m))) == dense_product(p, g, f, n, k, m));
    }
  }
}

TEST_CASE("lazy and eager maps with equal columns are equal") {
  const Residue p = 3;
  const Index n = 5;
  const LinearMap lazy(p, n, n, [](Index j) { return SparseVec::unit(j); });
  CHECK(lazy == LinearMap::identity(p, n));
  const LinearMap wide(p, 1, LinearMap::kEagerColumns + 5, [](Index) { return SparseVec::unit(0); });
  CHECK(wide.is_lazy());
  CHECK(wide.column(LinearMap::kEagerColumns + 4) == SparseVec::unit(0));
}

TEST_CASE("rank matches the size of the image") {
  std::mt19937 rng(11);
  for (Residue p : {2u, 3u}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::uniform_int_distribution<Index> dim(0, 4);
      const Index rows = dim(rng), cols = dim(rng);
      const Dense a = random_dense(rng, p, rows, cols);
      CHECK(power(p, rank(to_map(p, a, rows, cols))) == image_size(p, a, rows, cols));
    }
  }
}

TEST_CASE("affine solution sets match brute force, in order") {
  std::mt19937 rng(3);
  for (Residue p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::uniform_int_distribution<Index> count(1, 4);
      const Index n = count(rng);
      std::uniform_int_distribution<Residue> r(0, p - 1);
      std::vector<LinearEquation> eqs(static_cast<std::size_t>(count(rng) - 1));
      for (auto& e : eqs) {
        for (Index v = 0; v < n; ++v) e.coeffs.push_back({v, r(rng)});
        e.rhs = r(rng);
      }
      // brute force, unknown 0 most significant
      std::vector<std::vector<Residue>> expected;
      std::vector<Residue> x(static_cast<std::size_t>(n), 0);
      while (true) {
        bool ok = true;
        for (const auto& e : eqs) {
          std::uint64_t s = 0;
          for (const auto& [v, c] : e.coeffs) s += std::uint64_t{c} * x[v];
          ok = ok && s % p == e.rhs;
        }
        if (ok) expected.push_back(x);
        Index c = n - 1;
        while (c >= 0 && x[c] == p - 1) x[c--] = 0;
        if (c < 0) break;
        ++x[c];
      }
      const auto space = AffineSpace::solve(p, n, eqs);
      if (expected.empty()) {
        CHECK_FALSE(space.has_value());
        continue;
      }
      REQUIRE(space.has_value());
      CHECK(space->size() == expected.size());
      std::vector<std::vector<Residue>> forward, backward;
      space->enumerate(false, [&](const std::vector<Residue>& s) {
        forward.push_back(s);
        return true;
      });
      space->enumerate(true, [&](const std::vector<Residue>& s) {
        backward.push_back(s);
        return true;
      });
      CHECK(forward == expected);
      std::reverse(expected.begin(), expected.end());
      CHECK(backward == expected);
    }
  }
}

TEST_CASE("Vect hom-sets have p^(mn) elements and identities are units") {
  for (Residue p : {2u, 3u}) {
    const Vect v(p);
    for (Index m = 0; m <= 2; ++m) {
      for (Index n = 0; n <= 2; ++n) {
        const auto homs = v.enumerate_homs(v.object(m), v.object(n));
        CHECK(homs.size() == power(p, m * n));
        for (const auto& f : homs) {
          CHECK(v.compose(v.identity(v.object(n)), f) == f);
          CHECK(v.compose(f, v.identity(v.object(m))) == f);
        }
      }
    }
  }
}

TEST_CASE("Vect monos and epis are the injective and surjective matrices") {
  const Vect v(2);
  for (Index m = 0; m <= 2; ++m) {
    for (Index n = 0; n <= 2; ++n) {
      for (const auto& f : v.enumerate_homs(v.object(m), v.object(n))) {
        const Index r = rank(f.matrix());
        CHECK(v.is_mono(f) == (r == m));
        CHECK(v.is_epi(f) == (r == n));
      }
    }
  }
}

TEST_CASE("first_mono is the first injective map in enumeration order") {
  for (Residue p : {2u, 3u}) {
    const Vect v(p);
    for (Index m = 0; m <= 2; ++m) {
      for (Index n = 0; n <= 3; ++n) {
        std::optional<VectMorphism> expected;
        for (const auto& f : v.enumerate_homs(v.object(m), v.object(n))) {
          if (v.is_mono(f)) {
            expected = f;
            break;
          }
        }
        const auto got = first_mono(v, v.object(m), v.object(n));
        REQUIRE(got.has_value() == expected.has_value());
        if (got) CHECK(*got == *expected);
      }
    }
  }
}

TEST_CASE("coproduct injections and copairing") {
  const Vect v(3);
  const auto a = v.object(1), b = v.object(2);
  const auto cp = v.coproduct(a, b);
  CHECK(cp.object.dim == 3);
  for (const auto& f : v.enumerate_homs(a, v.object(1))) {
    for (const auto& g : v.enumerate_homs(b, v.object(1))) {
      const auto fg = v.copair(f, g);
      CHECK(v.compose(fg, cp.inj1) == f);
      CHECK(v.compose(fg, cp.inj2) == g);
    }
  }
  const auto id = v.identity(a);
  const auto nabla = codiagonal(v, a);
  const auto cpa = v.coproduct(a, a);
  CHECK(v.compose(nabla, cpa.inj1) == id);
  CHECK(v.compose(nabla, cpa.inj2) == id);
}

TEST_CASE("search caps stop runaway enumeration") {
  const Vect v(2, {SearchOrder::forward, 10});
  CHECK_THROWS_AS(v.enumerate_homs(v.object(3), v.object(3)), HomSetTooLarge);
}
