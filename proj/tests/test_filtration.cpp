#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gfg/catalog.hpp"
#include "gfg/filtration.hpp"

using namespace gfg;

TEST_CASE("base filtrations of sl2") {
  CatalogEntry sl2 = catalog_sl2();
  Filtration np = plus_filtration(sl2.grading);
  Filtration nm = minus_filtration(sl2.grading);
  CHECK(np.step(1).dim() == 1);
  CHECK(np.step(0).dim() == 2);
  CHECK(np.step(2).dim() == 0);
  CHECK(np.step(-1).dim() == 3);
  CHECK(nm.step(1).dim() == 1);
  CHECK(is_filtration(sl2.algebra, np).ok());
  CHECK(is_filtration(sl2.algebra, nm).ok());
  CHECK(is_transversal(np, nm));
}

TEST_CASE("a non-filtration is reported") {
  CatalogEntry sl2 = catalog_sl2();
  Filtration bad = plus_filtration(sl2.grading);
  // swap the steps: nesting breaks
  std::swap(bad.steps[0], bad.steps[1]);
  CHECK_FALSE(is_filtration(sl2.algebra, bad).ok());
}

TEST_CASE("transversal pair recovers the grading") {
  CatalogEntry g = catalog_gl_blocks({2, 2});
  Filtration np = plus_filtration(g.grading);
  Filtration nm = minus_filtration(g.grading);
  Grading G2 = grading_from_transversal(g.algebra, np, nm);
  CHECK(G2.layers == g.grading.layers);
  CHECK(G2.char_derivation == g.grading.char_derivation);
  // moving one side keeps transversality generically
  GradedFrame fr(g.algebra, g.grading);
  Matrix v = fr.plus_embed(1).col(0);
  Matrix exps = nilpotent_exp(ad(g.algebra, v), 2);
  Filtration m = apply(exps, nm);
  CHECK(is_transversal(m, np));
  Grading G3 = grading_from_transversal(g.algebra, np, m);
  CHECK(validate_grading(g.algebra, G3).ok());
  CHECK_THROWS_AS(grading_from_transversal(g.algebra, np, np), std::invalid_argument);
}

TEST_CASE("filtration-raising derivations of sl2") {
  CatalogEntry sl2 = catalog_sl2();
  Filtration np = plus_filtration(sl2.grading);
  Subspace u = u_of(sl2.algebra, np);
  // exactly ad(g_1): one dimension
  CHECK(u.dim() == 1);
  Matrix ade = ad(sl2.algebra, basis_element(sl2.algebra, 0).coords);
  Matrix vec(9, 1);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) vec.at(r * 3 + c, 0) = ade.at(r, c);
  CHECK(u.contains(vec));
}

TEST_CASE("torsor iteration and solve") {
  CatalogEntry sl2 = catalog_sl2();
  const LieAlgebra& L = sl2.algebra;
  Matrix ade = ad(L, basis_element(L, 0).coords);
  Filtration nm = minus_filtration(sl2.grading);
  Filtration target = apply(nilpotent_exp(ade, 2), nm);
  Matrix X = torsor_solve(L, sl2.grading, target);
  CHECK(X == ade);
  int rounds = 0;
  Matrix D = sl2.grading.char_derivation;
  Matrix W = nilpotent_exp(ade, 2) * D * nilpotent_exp(-ade, 2) - D;
  Matrix Y = torsor_iterate(D, W, 1, &rounds);
  CHECK(rounds <= 3);
  CHECK(nilpotent_exp(Y, 2) * D * nilpotent_exp(-Y, 2) == D + W);
  CHECK(Y == ade);
  // non-transversal target is rejected
  CHECK_THROWS_AS(torsor_solve(L, sl2.grading, plus_filtration(sl2.grading)),
                  std::invalid_argument);
}

TEST_CASE("chart coordinates invert the exponential") {
  CatalogEntry g = catalog_gl_blocks({2, 1, 1});
  const LieAlgebra& L = g.algebra;
  GradedFrame fr(L, g.grading);
  Matrix v = fr.plus_embed(1).col(0) + fr.plus_embed(1).col(4) * Rat(2);
  Filtration m = apply(nilpotent_exp(ad(L, v), 4), minus_filtration(g.grading));
  Element back = chart_coordinates(L, g.grading, m);
  CHECK(back.coords == v);
}

TEST_CASE("nilpotent exponential rejects non-nilpotent input") {
  CHECK_THROWS_AS(nilpotent_exp(Matrix::identity(2), 5), std::invalid_argument);
}
