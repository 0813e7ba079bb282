#include "gfg/elementary_group.hpp"

#include <stdexcept>

namespace gfg {

GroupElement identity_element(const GradedFrame& fr) {
  GroupElement g;
  g.matrix = Matrix::identity(fr.dim());
  g.inv = g.matrix;
  return g;
}

GroupElement exp_ad(const GradedFrame& fr, const Matrix& v, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("exp_ad: sign must be +-1");
  bool member = (sign == 1) ? fr.in_plus_part(v) : fr.in_minus_part(v);
  if (!member)
    throw std::invalid_argument("exp_ad: generator outside the required nilpotent part");
  GroupElement g;
  Matrix a = ad(fr.algebra(), v);
  g.matrix = nilpotent_exp(a, 2 * fr.k());
  g.inv = nilpotent_exp(-a, 2 * fr.k());
  if (!v.is_zero()) g.word.push_back({sign, v});
  return g;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  GroupElement g;
  g.matrix = a.matrix * b.matrix;
  g.inv = b.inv * a.inv;
  g.word = a.word;
  g.word.insert(g.word.end(), b.word.begin(), b.word.end());
  return g;
}

GroupElement inverse(const GroupElement& g) {
  GroupElement r;
  r.matrix = g.inv;
  r.inv = g.matrix;
  for (auto it = g.word.rbegin(); it != g.word.rend(); ++it)
    r.word.push_back({it->sign, -it->v});
  return r;
}

static void check_layer(const GradedFrame& fr, int i) {
  if (i < 1 || i > fr.k()) throw std::invalid_argument("layer index out of range");
}

static void check_plus(const GradedFrame& fr, const Matrix& x) {
  if (!fr.in_plus_part(x)) throw std::invalid_argument("x must lie in n+_1");
}

Matrix denominator(const GradedFrame& fr, const GroupElement& g, const Matrix& x, int i) {
  check_layer(fr, i);
  check_plus(fr, x);
  Matrix m = nilpotent_exp(-ad(fr.algebra(), x), 2 * fr.k()) * g.inv;
  return fr.plus_proj(i) * m * fr.plus_embed(i);
}

Matrix codenominator(const GradedFrame& fr, const GroupElement& g, const Matrix& x, int i) {
  check_layer(fr, i);
  check_plus(fr, x);
  Matrix m = g.matrix * nilpotent_exp(ad(fr.algebra(), x), 2 * fr.k());
  return fr.minus_proj(i) * m * fr.minus_embed(i);
}

Matrix bergman(const GradedFrame& fr, const Matrix& x, const Matrix& w, int i, int sign) {
  if (!fr.in_minus_part(w)) throw std::invalid_argument("bergman: w must lie in n-_1");
  GroupElement ew = exp_ad(fr, w, -1);
  if (sign > 0) return denominator(fr, ew, x, i);
  return codenominator(fr, ew, x, i);
}

Matrix numerator(const GradedFrame& fr, const GroupElement& g, const Matrix& x) {
  if (!fr.grading().euler) throw std::invalid_argument("numerator: grading is not inner");
  check_plus(fr, x);
  Matrix u = nilpotent_exp(-ad(fr.algebra(), x), 2 * fr.k()) * g.inv * (*fr.grading().euler);
  Matrix acc(fr.dim(), 1);
  for (int n = 1; n <= fr.k(); ++n) acc = acc + fr.project(u, n);
  return acc;
}

Matrix compressed_exp_plus(const GradedFrame& fr, const Matrix& y, int i) {
  check_layer(fr, i);
  return fr.plus_proj(i) * nilpotent_exp(ad(fr.algebra(), y), 2 * fr.k()) * fr.plus_embed(i);
}

Matrix psi(const GradedFrame& fr, int n, const Matrix& v) {
  if (n < 1 || n > fr.k()) throw std::invalid_argument("psi: degree out of range");
  if (!fr.grading().euler) throw std::invalid_argument("psi: grading is not inner");
  Matrix vt(fr.dim(), 1);
  for (int j = 1; j < n; ++j) vt = vt + fr.project(v, j);
  const Matrix& E = *fr.grading().euler;
  Matrix t = E - nilpotent_exp(ad(fr.algebra(), vt), 2 * fr.k()) * E;
  return fr.project(t, n);
}

ChartResult act_in_chart(const GradedFrame& fr, const GroupElement& g, const Matrix& x) {
  check_plus(fr, x);
  ChartResult res;
  for (int i = 1; i <= fr.k(); ++i) {
    if (det(denominator(fr, g, x, i)) == 0) {
      res.failed_layer = i;
      res.failed_side = 'd';
      return res;
    }
    if (det(codenominator(fr, g, x, i)) == 0) {
      res.failed_layer = i;
      res.failed_side = 'c';
      return res;
    }
  }
  Matrix d1 = denominator(fr, g, x, 1);
  Matrix u_coords = *invert(d1) * (fr.plus_proj(1) * numerator(fr, g, x));
  Matrix u = fr.plus_embed(1) * u_coords;  // element of n+_1
  Matrix gx(fr.dim(), 1);
  gx = gx + fr.project(u, 1);
  for (int n = 2; n <= fr.k(); ++n) {
    Matrix corr = fr.project(u, n) - psi(fr, n, gx);
    gx = gx + corr * (Rat(1) / Rat(n));
  }
  res.value = gx;
  return res;
}

bool in_omega_plus(const GradedFrame& fr, const GroupElement& g) {
  Matrix zero(fr.dim(), 1);
  for (int i = 1; i <= fr.k(); ++i) {
    if (det(denominator(fr, g, zero, i)) == 0) return false;
    if (det(codenominator(fr, g, zero, i)) == 0) return false;
  }
  return true;
}

std::optional<OmegaTriple> omega_decompose(const GradedFrame& fr, const GroupElement& g) {
  Matrix zero(fr.dim(), 1);
  ChartResult v0 = act_in_chart(fr, g, zero);
  if (!v0.value) return std::nullopt;
  const Matrix& v = *v0.value;
  GroupElement p = compose(inverse(exp_ad(fr, v, 1)), g);  // in P-
  // P- = H U-: read the unipotent part off the minus-side chart of p^{-1}.n+
  const LieAlgebra& L = fr.algebra();
  Grading opp = opposite(fr.grading());
  Filtration nplus = plus_filtration(fr.grading());
  Element wprime = chart_coordinates(L, opp, apply(p.inv, nplus));
  Matrix w = -wprime.coords;  // e^{-ad w}.n+ = p^{-1}.n+
  Matrix h = p.matrix * nilpotent_exp(-ad(L, w), 2 * fr.k());
  if (h * fr.grading().char_derivation != fr.grading().char_derivation * h)
    throw std::logic_error("omega_decompose: H-part does not preserve the grading");
  OmegaTriple t;
  t.v = v;
  t.h = h;
  t.w = w;
  return t;
}

}  // namespace gfg
