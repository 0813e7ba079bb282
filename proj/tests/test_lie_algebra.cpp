#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gfg/catalog.hpp"
#include "gfg/filtration.hpp"

using namespace gfg;

TEST_CASE("sl2 structure and bracket") {
  CatalogEntry sl2 = catalog_sl2();
  const LieAlgebra& L = sl2.algebra;
  REQUIRE(L.dim() == 3);
  CHECK(L.jacobi_ok());
  Element e = basis_element(L, 0), h = basis_element(L, 1), f = basis_element(L, 2);
  CHECK(bracket(h, e).coords == (e.coords * Rat(2)));
  CHECK(bracket(h, f).coords == (f.coords * Rat(-2)));
  CHECK(bracket(e, f).coords == h.coords);
  CHECK(bracket(e, e).coords.is_zero());
}

TEST_CASE("antisymmetry is enforced at construction") {
  Matrix z(2, 1);
  Matrix one(2, 1);
  one.at(0, 0) = 1;
  std::vector<std::vector<Matrix>> c(2, std::vector<Matrix>(2, z));
  c[0][1] = one;
  c[1][0] = one;  // should be -one
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, c), std::invalid_argument);
}

TEST_CASE("jacobi violations are reported") {
  // "brackets" [a,b]=c, [b,c]=a, [a,c]=a violate Jacobi
  int d = 3;
  Matrix z(d, 1);
  auto unitv = [&](int i) {
    Matrix m(d, 1);
    m.at(i, 0) = 1;
    return m;
  };
  std::vector<std::vector<Matrix>> c(3, std::vector<Matrix>(3, z));
  c[0][1] = unitv(2);
  c[1][0] = -unitv(2);
  c[1][2] = unitv(0);
  c[2][1] = -unitv(0);
  c[0][2] = unitv(0);
  c[2][0] = -unitv(0);
  LieAlgebra L({"a", "b", "c"}, c);
  CHECK_FALSE(L.jacobi_ok());
  CHECK_FALSE(L.check_jacobi().violations.empty());
}

TEST_CASE("ad, killing form, derivations, automorphisms") {
  CatalogEntry sl2 = catalog_sl2();
  const LieAlgebra& L = sl2.algebra;
  Matrix K = killing_form(L);
  // basis e, h, f: kappa(e,f) = 4, kappa(h,h) = 8
  Matrix expect(3, 3);
  expect.at(0, 2) = 4;
  expect.at(2, 0) = 4;
  expect.at(1, 1) = 8;
  CHECK(K == expect);
  Matrix ade = ad(L, basis_element(L, 0).coords);
  CHECK(is_derivation(L, ade));
  CHECK(is_automorphism(L, nilpotent_exp(ade, 2)));
  Matrix notder = Matrix::identity(3);
  CHECK_FALSE(is_derivation(L, notder));
  CHECK_FALSE(is_automorphism(L, notder * Rat(2)));
}

TEST_CASE("gl block algebra satisfies the axioms") {
  CatalogEntry g = catalog_gl_blocks({2, 2});
  CHECK(g.algebra.dim() == 16);
  CHECK(g.algebra.jacobi_ok());
  // [E12, E21] = E11 - E22
  const LieAlgebra& L = g.algebra;
  Element e12 = basis_element(L, 0 * 4 + 1), e21 = basis_element(L, 1 * 4 + 0);
  Matrix expect(16, 1);
  expect.at(0 * 4 + 0, 0) = 1;
  expect.at(1 * 4 + 1, 0) = -1;
  CHECK(bracket(e12, e21).coords == expect);
  CHECK(killing_form(L).rows() == 16);
  CHECK(det(killing_form(L)) == 0);  // gl has a center
}
