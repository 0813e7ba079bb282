#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gfg/catalog.hpp"
#include "gfg/elementary_group.hpp"

using namespace gfg;

namespace {
struct Sl2 {
  CatalogEntry entry = catalog_sl2();
  GradedFrame fr{entry.algebra, entry.grading};
  Matrix e = basis_element(entry.algebra, 0).coords;
  Matrix f = basis_element(entry.algebra, 2).coords;
};
}  // namespace

TEST_CASE("group elements carry exact inverses") {
  Sl2 s;
  GroupElement g = compose(exp_ad(s.fr, s.e, 1), exp_ad(s.fr, s.f, -1));
  CHECK(g.matrix * g.inv == Matrix::identity(3));
  GroupElement gi = inverse(g);
  CHECK(gi.matrix == g.inv);
  CHECK(gi.word.size() == 2);
  CHECK(gi.word[0].v == -s.f);
  CHECK_THROWS_AS(exp_ad(s.fr, s.e, -1), std::invalid_argument);
}

TEST_CASE("denominator of exp(ad wf) at te is (1+tw)^2") {
  Sl2 s;
  for (int t = -2; t <= 2; ++t)
    for (int w = -2; w <= 2; ++w) {
      GroupElement g = exp_ad(s.fr, s.f * Rat(w), -1);
      Matrix d = denominator(s.fr, g, s.e * Rat(t), 1);
      Rat expect = (1 + Rat(t) * w) * (1 + Rat(t) * w);
      CHECK(d.at(0, 0) == expect);
    }
}

TEST_CASE("numerator of the identity is the point itself") {
  Sl2 s;
  GroupElement id = identity_element(s.fr);
  for (int t = -2; t <= 2; ++t)
    CHECK(numerator(s.fr, id, s.e * Rat(t)) == s.e * Rat(t));
}

TEST_CASE("bergman operators at frozen values") {
  Sl2 s;
  CHECK(bergman(s.fr, s.e, s.f, 1, 1).at(0, 0) == 4);
  CHECK(bergman(s.fr, s.e, -s.f, 1, 1).at(0, 0) == 0);
  CHECK(bergman(s.fr, s.e, s.f, 1, -1).at(0, 0) == 4);
}

TEST_CASE("chart action of exp(ad f) and of the Weyl word") {
  Sl2 s;
  GroupElement g = exp_ad(s.fr, s.f, -1);
  ChartResult r = act_in_chart(s.fr, g, s.e);
  REQUIRE(r.value);
  CHECK(*r.value == s.e * Rat(1, 2));
  // Weyl element: x -> -1/x
  GroupElement wl = compose(compose(exp_ad(s.fr, s.e, 1), exp_ad(s.fr, -s.f, -1)),
                            exp_ad(s.fr, s.e, 1));
  ChartResult r2 = act_in_chart(s.fr, wl, s.e * Rat(2));
  REQUIRE(r2.value);
  CHECK(*r2.value == s.e * Rat(-1, 2));
  ChartResult r0 = act_in_chart(s.fr, wl, Matrix(3, 1));
  CHECK_FALSE(r0.value.has_value());
  CHECK(r0.failed_layer == 1);
  CHECK_FALSE(in_omega_plus(s.fr, wl));
  CHECK(in_omega_plus(s.fr, g));
}

TEST_CASE("psi vanishes on 3-graded algebras") {
  Sl2 s;
  CHECK(psi(s.fr, 1, s.e * Rat(3)).is_zero());
}

TEST_CASE("omega decomposition is exact") {
  Sl2 s;
  GroupElement g = compose(exp_ad(s.fr, s.e * Rat(2), 1), exp_ad(s.fr, s.f, -1));
  auto t = omega_decompose(s.fr, g);
  REQUIRE(t);
  Matrix rebuilt = nilpotent_exp(ad(s.entry.algebra, t->v), 2) * t->h *
                   nilpotent_exp(ad(s.entry.algebra, t->w), 2);
  CHECK(rebuilt == g.matrix);
  CHECK(t->h * s.entry.grading.char_derivation ==
        s.entry.grading.char_derivation * t->h);
  // outside the big cell there is no decomposition
  GroupElement wl = compose(compose(exp_ad(s.fr, s.e, 1), exp_ad(s.fr, -s.f, -1)),
                            exp_ad(s.fr, s.e, 1));
  CHECK_FALSE(omega_decompose(s.fr, wl).has_value());
}

TEST_CASE("five-graded chart action uses the degree recursion") {
  CatalogEntry g5 = catalog_gl_blocks({2, 1, 1});
  GradedFrame fr(g5.algebra, g5.grading);
  Matrix x = fr.plus_embed(1).col(0) + fr.plus_embed(1).col(3);
  Matrix w = fr.minus_embed(1).col(0);
  GroupElement g = exp_ad(fr, w, -1);
  ChartResult r = act_in_chart(fr, g, x);
  if (r.value) {
    // the filtration moved by the word matches the chart value exactly
    Filtration nm = minus_filtration(g5.grading);
    Filtration lhs = apply(nilpotent_exp(ad(g5.algebra, *r.value), 4), nm);
    Filtration rhs = apply(g.matrix, apply(nilpotent_exp(ad(g5.algebra, x), 4), nm));
    CHECK(lhs == rhs);
  }
  // psi_2 is the quadratic correction: psi(fr, 2, v) = -[v_1,[E,v_1]]-ish,
  // concretely the degree-2 part of E - e^{ad v_1}E
  Matrix v1 = fr.plus_embed(1).col(0);
  const Matrix& E = *g5.grading.euler;
  Matrix expect = fr.project(E - nilpotent_exp(ad(g5.algebra, v1), 4) * E, 2);
  CHECK(psi(fr, 2, v1) == expect);
}
