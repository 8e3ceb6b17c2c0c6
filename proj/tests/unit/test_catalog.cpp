#include "oracles.hpp"

#include "lieortho/catalog.hpp"
#include "lieortho/classify.hpp"
#include "lieortho/linalg.hpp"

#include <gtest/gtest.h>

using namespace lieortho;

namespace {

Subspace declared(std::size_t n, const std::vector<IndexRange> &ranges) {
  Subspace s(n);
  for (const auto &r : ranges)
    s = sum(s, Subspace::coordinate_range(n, r.begin, r.end));
  return s;
}

std::vector<std::string> all_specs() {
  return {"abelian:0", "abelian:3",   "g1",           "g2",           "sl2",
          "gl:2",      "gl:3",        "sl:2",         "sl:3",         "sl:4",
          "heisenberg:1", "heisenberg:3", "sl2-semidirect", "minimal-nilradical:4",
          "minimal-nilradical:5", "sl2+g2", "sl2+g1", "g2+g2+g1"};
}

} // namespace

TEST(Catalog, EveryConstructorSatisfiesJacobi) {
  for (const auto &s : all_specs())
    EXPECT_TRUE(jacobi_check(catalog::by_name(s)).ok) << s;
}

TEST(Catalog, DeclaredMetadataIsConsistent) {
  for (const auto &s : all_specs()) {
    const auto L = catalog::by_name(s);
    const auto &d = L.decomposition();
    if (!d.center.empty()) {
      EXPECT_EQ(declared(L.dim(), d.center), center(L)) << s;
    }
    for (const auto &r : d.simple) {
      const Subspace c = Subspace::coordinate_range(L.dim(), r.begin, r.end);
      EXPECT_TRUE(is_ideal(L, c)) << s;
      EXPECT_EQ(derived_subalgebra(restrict_algebra(L, c)).dim(), c.dim()) << s;
    }
    for (const auto &r : d.summands)
      EXPECT_TRUE(is_ideal(L, Subspace::coordinate_range(L.dim(), r.begin, r.end))) << s;
    if (!d.radical.empty()) {
      EXPECT_EQ(declared(L.dim(), d.radical), radical(L)) << s;
    }
    if (d.semisimple) {
      EXPECT_TRUE(radical(L).is_zero()) << s;
    }
  }
}

TEST(Catalog, Abelian) {
  EXPECT_EQ(catalog::abelian(0).dim(), 0u);
  EXPECT_TRUE(center(catalog::abelian(3)).is_whole());
  EXPECT_TRUE(catalog::abelian(3).is_abelian());
}

TEST(Catalog, G2) {
  const auto L = catalog::g2();
  EXPECT_EQ(L.basis_bracket(0, 1), unit_vector(2, 1));
  EXPECT_TRUE(center(L).is_zero());
  EXPECT_EQ(solvability_degree(L), 2u);
  EXPECT_FALSE(nilpotency_degree(L).has_value());
}

TEST(Catalog, Sl2Cross) {
  const auto L = catalog::sl2_cross();
  EXPECT_EQ(L.basis_bracket(0, 1), unit_vector(3, 2));
  EXPECT_EQ(L.basis_bracket(1, 2), unit_vector(3, 0));
  EXPECT_EQ(L.basis_bracket(2, 0), unit_vector(3, 1));
  EXPECT_TRUE(radical(L).is_zero());
  EXPECT_EQ(killing_form(L), Rational(-2) * Matrix::identity(3));
  EXPECT_TRUE(derived_subalgebra(L).is_whole());
}

TEST(Catalog, GlnMatchesMatrixCommutators) {
  for (std::size_t n : {2, 3}) {
    const auto L = catalog::gln(n);
    ASSERT_EQ(L.dim(), n * n);
    auto unit = [n](std::size_t k) {
      Matrix m(n, n);
      m(k / n, k % n) = 1;
      return m;
    };
    for (std::size_t a = 0; a < n * n; ++a)
      for (std::size_t b = 0; b < n * n; ++b) {
        const Matrix c = unit(a) * unit(b) - unit(b) * unit(a);
        Vector flat(n * n);
        for (std::size_t k = 0; k < n * n; ++k)
          flat[k] = c(k / n, k % n);
        EXPECT_EQ(L.basis_bracket(a, b), flat);
      }
    Vector identity(n * n);
    for (std::size_t i = 0; i < n; ++i)
      identity[i * n + i] = 1;
    EXPECT_EQ(center(L), Subspace::span(n * n, {identity}));
  }
  const auto gl2 = catalog::gln(2);
  // [E12, E21] = E11 - E22
  EXPECT_EQ(gl2.basis_bracket(1, 2), (Vector{1, 0, 0, -1}));
  EXPECT_THROW(catalog::gln(1), std::invalid_argument);
}

TEST(Catalog, Sln) {
  for (std::size_t n : {2, 3, 4}) {
    const auto L = catalog::sln(n);
    EXPECT_EQ(L.dim(), n * n - 1);
    EXPECT_TRUE(center(L).is_zero());
    EXPECT_TRUE(radical(L).is_zero());
  }
  // sl2: off-diagonal E12, E21, then H; [E12, E21] = H, [H, E12] = 2 E12
  const auto s = catalog::sln(2);
  EXPECT_EQ(s.basis_bracket(0, 1), unit_vector(3, 2));
  EXPECT_EQ(s.basis_bracket(2, 0), scale(2, unit_vector(3, 0)));
  EXPECT_THROW(catalog::sln(1), std::invalid_argument);
}

TEST(Catalog, Heisenberg) {
  for (std::size_t n : {1, 2, 3}) {
    const auto L = catalog::heisenberg(n);
    EXPECT_EQ(L.dim(), 2 * n + 1);
    EXPECT_EQ(nilpotency_degree(L), 2u);
    EXPECT_EQ(center(L), Subspace::coordinate_range(2 * n + 1, 0, 1));
    EXPECT_EQ(derived_subalgebra(L), Subspace::coordinate_range(2 * n + 1, 0, 1));
    // The coefficient matrix of e restricted to (p, q) is -S.
    EXPECT_EQ(L.structure_matrix(0).block(1, 1, 2 * n, 2 * n), -symplectic_form(n));
  }
  EXPECT_EQ(catalog::heisenberg(2).names(),
            (std::vector<std::string>{"e", "p1", "p2", "q1", "q2"}));
}

TEST(Catalog, AlmostAbelian) {
  // A = [[1]] is g2 after swapping e1 and e2.
  const auto L = catalog::almost_abelian(Matrix{{1}});
  const Matrix swap{{0, 1}, {1, 0}};
  const auto g2 = catalog::g2();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      EXPECT_EQ(swap * L.basis_bracket(i, j), bracket(g2, swap.column(i), swap.column(j)));

  const Matrix a{{0, 1, 0}, {0, 0, 0}, {0, 0, 2}};
  const auto M = catalog::almost_abelian(a);
  Matrix k = kernel(a).basis();
  Matrix embedded(4, k.cols());
  embedded.set_block(0, 0, k);
  EXPECT_EQ(center(M), Subspace(embedded));
  EXPECT_EQ(solvability_degree(M), 2u);
  EXPECT_THROW(catalog::almost_abelian(Matrix(2, 2)), std::invalid_argument);
}

TEST(Catalog, Sl2Semidirect) {
  const auto L = catalog::sl2_semidirect_2g1();
  EXPECT_EQ(radical(L), Subspace::coordinate_range(5, 3, 5));
  EXPECT_TRUE(center(L).is_zero());
  EXPECT_TRUE(jacobi_check(L).ok);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      nonzero += is_zero(L.basis_bracket(i, j)) ? 0 : 1;
  EXPECT_EQ(nonzero, 7u);
  EXPECT_EQ(L.basis_bracket(1, 4), unit_vector(5, 3));
  EXPECT_EQ(L.basis_bracket(0, 4), scale(-1, unit_vector(5, 4)));
}

TEST(Catalog, MinimalNilradical) {
  const auto even = catalog::minimal_nilradical(4);
  EXPECT_TRUE(center(even).is_zero());
  EXPECT_EQ(even.decomposition().summands.size(), 2u);
  const auto odd = catalog::minimal_nilradical(5);
  EXPECT_EQ(center(odd), Subspace::coordinate_range(5, 0, 1));
  EXPECT_EQ(odd.decomposition().summands.front(), (IndexRange{0, 1}));
}

TEST(Catalog, ByNameRejectsUnknown) {
  EXPECT_THROW(catalog::by_name("e8"), std::invalid_argument);
  EXPECT_THROW(catalog::by_name("heisenberg"), std::invalid_argument);
  EXPECT_THROW(catalog::by_name("heisenberg:x"), std::invalid_argument);
}
