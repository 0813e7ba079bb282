#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gfg/catalog.hpp"

using namespace gfg;

TEST_CASE("sl2 grading from the Euler element") {
  CatalogEntry sl2 = catalog_sl2();
  const Grading& G = sl2.grading;
  CHECK(G.k == 1);
  CHECK(G.effective_k == 1);
  CHECK(G.layer(1).dim() == 1);
  CHECK(G.layer(0).dim() == 1);
  CHECK(G.layer(-1).dim() == 1);
  // D = diag(1, 0, -1) in the e, h, f basis
  Matrix D(3, 3);
  D.at(0, 0) = 1;
  D.at(2, 2) = -1;
  CHECK(G.char_derivation == D);
  CHECK(grading_polynomial(D, 1).is_zero());
  CHECK(validate_grading(sl2.algebra, G).ok());
  REQUIRE(G.euler.has_value());
  auto E = euler_from_derivation(sl2.algebra, D);
  REQUIRE(E.has_value());
  CHECK(E->coords == *G.euler);
}

TEST_CASE("grading reconstruction from derivation and layers") {
  CatalogEntry sl2 = catalog_sl2();
  Grading G2 = grading_from_derivation(sl2.algebra, sl2.grading.char_derivation, 1);
  CHECK(G2.layers == sl2.grading.layers);
  std::vector<Subspace> layers = sl2.grading.layers;
  Grading G3 = grading_from_layers(sl2.algebra, layers, 1, std::nullopt);
  CHECK(G3.char_derivation == sl2.grading.char_derivation);
  // identity is not a grading derivation for sl2 (nonzero trace on brackets)
  CHECK_THROWS_AS(grading_from_derivation(sl2.algebra, Matrix::identity(3), 1),
                  std::invalid_argument);
}

TEST_CASE("opposite grading") {
  CatalogEntry g = catalog_gl_blocks({2, 1, 1});
  Grading opp = opposite(g.grading);
  CHECK(validate_grading(g.algebra, opp).ok());
  CHECK(opp.layer(1) == g.grading.layer(-1));
  CHECK(opp.char_derivation == -g.grading.char_derivation);
  REQUIRE(opp.euler.has_value());
  CHECK(*opp.euler == -*g.grading.euler);
}

TEST_CASE("graded frame projections and memberships") {
  CatalogEntry g = catalog_gl_blocks({2, 2});
  GradedFrame fr(g.algebra, g.grading);
  CHECK(fr.plus_dim(1) == 4);
  CHECK(fr.minus_dim(1) == 4);
  Matrix sum(16, 16);
  for (int n = -1; n <= 1; ++n) sum = sum + fr.proj(n);
  CHECK(sum == Matrix::identity(16));
  CHECK(fr.plus_proj(1) * fr.plus_embed(1) == Matrix::identity(4));
  Matrix v = fr.plus_embed(1).col(0);
  CHECK(fr.in_plus_part(v));
  CHECK_FALSE(fr.in_minus_part(v));
  CHECK(fr.project(v, 1) == v);
  CHECK(fr.project(v, 0).is_zero());
}

TEST_CASE("five-graded layer dimensions") {
  CatalogEntry g = catalog_gl_blocks({2, 1, 1});
  CHECK(g.grading.k == 2);
  CHECK(g.grading.layer(2).dim() == 2);
  CHECK(g.grading.layer(1).dim() == 3);
  CHECK(g.grading.layer(0).dim() == 6);
  CHECK(g.grading.layer(-1).dim() == 3);
  CHECK(g.grading.layer(-2).dim() == 2);
}
