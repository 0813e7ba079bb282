#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gfg/catalog.hpp"
#include "gfg/flag_geometry.hpp"

using namespace gfg;

TEST_CASE("base points and witnesses") {
  CatalogEntry sl2 = catalog_sl2();
  GradedFrame fr(sl2.algebra, sl2.grading);
  GeometryPoint op = make_point(fr, 1, identity_element(fr));
  GeometryPoint om = make_point(fr, -1, identity_element(fr));
  CHECK(op.filtration == minus_filtration(sl2.grading));
  CHECK(om.filtration == plus_filtration(sl2.grading));
  Matrix e = basis_element(sl2.algebra, 0).coords;
  GeometryPoint moved = make_point(fr, 1, exp_ad(fr, e, 1));
  CHECK(moved.filtration != op.filtration);
  auto re = rewitness(fr, 1, moved.filtration);
  REQUIRE(re);
  CHECK(re->witness.word.size() == 1);
  CHECK(re->witness.word[0].v == e);
  // the plus base filtration itself is not in the plus chart
  CHECK_FALSE(rewitness(fr, 1, om.filtration).has_value());
}

TEST_CASE("canonical kernel equals the Bergman operator on chart pairs") {
  CatalogEntry g5 = catalog_gl_blocks({2, 1, 1});
  GradedFrame fr(g5.algebra, g5.grading);
  Matrix x = fr.plus_embed(1).col(1) + fr.plus_embed(1).col(4) * Rat(2);
  Matrix w = fr.minus_embed(1).col(2);
  GeometryPoint n_pt = make_point(fr, 1, exp_ad(fr, x, 1));
  GeometryPoint m_pt = make_point(fr, -1, exp_ad(fr, w, -1));
  for (int i = 1; i <= 2; ++i)
    CHECK(canonical_kernel(fr, m_pt, n_pt, i).matrix == bergman(fr, x, -w, i, 1));
  CHECK_THROWS_AS(canonical_kernel(fr, n_pt, m_pt, 1), std::invalid_argument);
}

TEST_CASE("kernel transversality matches filtration transversality") {
  CatalogEntry sl2 = catalog_sl2();
  GradedFrame fr(sl2.algebra, sl2.grading);
  Matrix e = basis_element(sl2.algebra, 0).coords;
  Matrix f = basis_element(sl2.algebra, 2).coords;
  GeometryPoint n_pt = make_point(fr, 1, exp_ad(fr, e, 1));
  GeometryPoint good = make_point(fr, -1, exp_ad(fr, -f, -1));
  GeometryPoint bad = make_point(fr, -1, exp_ad(fr, f, -1));
  CHECK(kernel_transversality(fr, good, n_pt));
  CHECK_FALSE(kernel_transversality(fr, bad, n_pt));
  CHECK(is_transversal(good.filtration, n_pt.filtration));
  CHECK_FALSE(is_transversal(bad.filtration, n_pt.filtration));
}

TEST_CASE("kernel equivariance under a group word") {
  CatalogEntry g5 = catalog_gl_blocks({2, 2});
  GradedFrame fr(g5.algebra, g5.grading);
  Matrix x = fr.plus_embed(1).col(0);
  Matrix w = fr.minus_embed(1).col(3);
  GeometryPoint n_pt = make_point(fr, 1, exp_ad(fr, x, 1));
  GeometryPoint m_pt = make_point(fr, -1, exp_ad(fr, w, -1));
  GroupElement g = compose(exp_ad(fr, fr.plus_embed(1).col(2), 1),
                           exp_ad(fr, fr.minus_embed(1).col(1), -1));
  CHECK(kernel_equivariance_check(fr, g, m_pt, n_pt, 1));
}

TEST_CASE("tangent representation and sections") {
  CatalogEntry sl2 = catalog_sl2();
  GradedFrame fr(sl2.algebra, sl2.grading);
  Matrix f = basis_element(sl2.algebra, 2).coords;
  GroupElement p = exp_ad(fr, f, -1);  // stabilizes the minus filtration
  CHECK(tangent_rep(fr, p, 1, 1) == Matrix::identity(1));
  CHECK(tangent_rep(fr, p, 1, -1) == Matrix::identity(1));
  Matrix e = basis_element(sl2.algebra, 0).coords;
  CHECK_THROWS_AS(tangent_rep(fr, exp_ad(fr, e, 1), 1, 1), std::invalid_argument);
  GeometryPoint pt = make_point(fr, 1, exp_ad(fr, e, 1));
  // value of the constant field h at the moved point
  Matrix h = basis_element(sl2.algebra, 1).coords;
  Matrix val = section_value(fr, h, pt, 1);
  CHECK(val.rows() == 1);
  CHECK(val.at(0, 0) == 2);  // e^{-ad e} h = h + 2e
}

TEST_CASE("Killing duality at a point") {
  CatalogEntry sl2 = catalog_sl2();
  GradedFrame fr(sl2.algebra, sl2.grading);
  Matrix e = basis_element(sl2.algebra, 0).coords;
  GeometryPoint pt = make_point(fr, 1, exp_ad(fr, e, 1));
  CHECK(killing_duality_check(fr, pt, 1));
  CatalogEntry gl = catalog_gl_blocks({1, 1});
  GradedFrame fr2(gl.algebra, gl.grading);
  GeometryPoint pt2 = make_point(fr2, 1, identity_element(fr2));
  CHECK_THROWS_AS(killing_duality_check(fr2, pt2, 1), std::domain_error);
}
