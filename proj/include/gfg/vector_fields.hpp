#ifndef GFG_VECTOR_FIELDS_HPP
#define GFG_VECTOR_FIELDS_HPP

#include <map>

#include "gfg/elementary_group.hpp"

namespace gfg {

// Graded-lexicographic monomial order on exponent vectors.
struct GrlexLess {
  bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

// Sparse multivariate polynomial over Q in canonical form (no zero terms,
// grlex-sorted keys): equal polynomials compare equal entrywise.
struct Poly {
  int nvars = 0;
  std::map<std::vector<unsigned>, Rat, GrlexLess> terms;

  static Poly zero(int nvars);
  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int j);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  bool operator==(const Poly& o) const { return nvars == o.nvars && terms == o.terms; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  bool is_zero() const { return terms.empty(); }
  int degree() const;  // -1 for the zero polynomial
  Rat eval(const std::vector<Rat>& point) const;
};

std::string poly_str(const Poly& p, const std::vector<std::string>& var_names);

// Polynomial map Q^nvars -> Q^m, one Poly per output coordinate.
struct PolyMap {
  int nvars = 0;
  std::vector<Poly> comps;

  bool operator==(const PolyMap& o) const {
    return nvars == o.nvars && comps == o.comps;
  }
  bool operator!=(const PolyMap& o) const { return !(*this == o); }

  Matrix eval(const std::vector<Rat>& point) const;  // column
};

// Algebra element with polynomial coordinates (length = dim).
using SymElement = std::vector<Poly>;

SymElement sym_constant(const LieAlgebra& L, int nvars, const Matrix& v);
SymElement sym_apply(const Matrix& m, const SymElement& z);
SymElement sym_add(const SymElement& a, const SymElement& b);
SymElement sym_scale(const SymElement& a, const Rat& s);
SymElement sym_bracket(const LieAlgebra& L, const SymElement& a, const SymElement& b);

// The generic point of n+_1: coordinates in the degree-ascending layer frame
// of n+_1 become the polynomial variables.
SymElement sym_chart_point(const GradedFrame& fr);

// Polynomial realization of Y in g as a map n+_1 -> n+_i (frame coordinates):
// x |-> pr_{n+_i}(e^{-ad x} Y). Output rows follow plus_proj(i).
PolyMap realize(const GradedFrame& fr, const Matrix& Y, int i);

// Independent closed forms, written out bracket by bracket per source layer
// of Y. The 3-graded form is pr(Y - [x,Y] + [x,[x,Y]]/2). The 5-graded
// forms cover i = 1 (x = x1 + x2 generic) and i = 2 (restricted to x in the
// top layer).
PolyMap closed_form_3graded(const GradedFrame& fr, const Matrix& Y);
PolyMap closed_form_5graded(const GradedFrame& fr, const Matrix& Y, int deg_Y, int i);

// Same polynomial map with every variable belonging to a layer below `deg`
// substituted by zero.
PolyMap restrict_to_layer(const GradedFrame& fr, const PolyMap& m, int deg);

// Equivariance of the realized fields under the chart action:
//   realize(g^{-1}Y, i)(x) = d_g(x)_i * pr e^{ad(g.x)} i * realize(Y, i)(g.x)
// checked at the sample point x; false also when g.x leaves the chart.
bool transform_check(const GradedFrame& fr, const GroupElement& g, const Matrix& Y,
                     int i, const Matrix& x);

// Variable names for the chart coordinates (x1..xm, aligned with the
// ascending layer frame of n+_1).
std::vector<std::string> chart_var_names(const GradedFrame& fr);

}  // namespace gfg

#endif
