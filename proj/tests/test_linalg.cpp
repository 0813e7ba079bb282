#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gfg/matrix.hpp"
#include "gfg/rational.hpp"
#include "gfg/subspace.hpp"

using namespace gfg;

static Matrix mk(int r, int c, std::initializer_list<Rat> v) {
  Matrix m(r, c);
  int i = 0;
  for (const Rat& x : v) {
    m.at(i / c, i % c) = x;
    ++i;
  }
  return m;
}

TEST_CASE("rational parsing") {
  CHECK(rat_parse("-3/6") == Rat(-1, 2));
  CHECK(rat_str(Rat(-1, 2)) == "-1/2");
  CHECK(rat_str(Rat(4, 2)) == "2");
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("abc"), std::invalid_argument);
}

TEST_CASE("determinant by fraction-free elimination") {
  Matrix m = mk(3, 3, {Rat(1, 2), 1, 0, 3, Rat(-2, 3), 1, 0, 4, 2});
  // cofactor expansion: 1/2*(-4/3-4) - 1*(6-0) + 0 = -26/3
  CHECK(det(m) == Rat(-26, 3));
  CHECK(det(Matrix::identity(4)) == 1);
  Matrix sing = mk(2, 2, {1, 2, 2, 4});
  CHECK(det(sing) == 0);
  CHECK_FALSE(invert(sing).has_value());
}

TEST_CASE("solve and invert") {
  Matrix a = mk(2, 2, {2, 0, 1, 3});
  Matrix b = mk(2, 1, {4, 5});
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  auto ai = invert(a);
  REQUIRE(ai);
  CHECK(*ai * a == Matrix::identity(2));
  // inconsistent system
  Matrix c = mk(2, 1, {1, 1});
  Matrix aa = mk(2, 2, {1, 1, 2, 2});
  CHECK_FALSE(solve(aa, c).has_value());
  // underdetermined: free variables are zeroed
  Matrix u = mk(1, 2, {1, 1});
  auto s = solve(u, mk(1, 1, {5}));
  REQUIRE(s);
  CHECK(s->at(0, 0) == 5);
  CHECK(s->at(1, 0) == 0);
}

TEST_CASE("kernel and image") {
  Matrix m = mk(2, 3, {1, 2, 3, 2, 4, 6});
  Subspace ker = kernel(m);
  CHECK(ker.dim() == 2);
  CHECK(ker.contains(mk(3, 1, {-2, 1, 0})));
  CHECK(image(m).dim() == 1);
}

TEST_CASE("subspace canonical form") {
  Matrix b1 = mk(3, 2, {1, 0, 1, 1, 0, 2});
  Matrix b2 = mk(3, 2, {1, 0, 2, 2, 2, 4});  // same span, different basis
  Subspace u = Subspace::from_columns(3, b1);
  Subspace v = Subspace::from_columns(3, b2);
  CHECK(u == v);
  CHECK(u.contains(mk(3, 1, {1, 2, 2})));
  CHECK_FALSE(u.contains(mk(3, 1, {1, 0, 0})));
  CHECK(sum(u, Subspace::from_columns(3, mk(3, 1, {1, 0, 0}))).dim() == 3);
  Subspace w = Subspace::from_columns(3, mk(3, 1, {1, 1, 0}));
  CHECK(intersect(u, w).dim() == 1);
  CHECK(is_direct_sum({w, Subspace::from_columns(3, mk(3, 2, {1, 0, 0, 1, 0, 0}))}, 3) ==
        false);
}
