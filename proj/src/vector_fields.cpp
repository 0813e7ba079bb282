#include "gfg/vector_fields.hpp"

#include <sstream>
#include <stdexcept>

namespace gfg {

bool GrlexLess::operator()(const std::vector<unsigned>& a,
                           const std::vector<unsigned>& b) const {
  unsigned da = 0, db = 0;
  for (unsigned e : a) da += e;
  for (unsigned e : b) db += e;
  if (da != db) return da < db;
  return a < b;
}

Poly Poly::zero(int nvars) {
  Poly p;
  p.nvars = nvars;
  return p;
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p = zero(nvars);
  if (c != 0) p.terms[std::vector<unsigned>(static_cast<size_t>(nvars))] = c;
  return p;
}

Poly Poly::variable(int nvars, int j) {
  if (j < 0 || j >= nvars) throw std::invalid_argument("Poly::variable: index");
  Poly p = zero(nvars);
  std::vector<unsigned> e(static_cast<size_t>(nvars));
  e[size_t(j)] = 1;
  p.terms[e] = 1;
  return p;
}

static void check_vars(const Poly& a, const Poly& b) {
  if (a.nvars != b.nvars) throw std::invalid_argument("Poly: variable count mismatch");
}

Poly Poly::operator+(const Poly& o) const {
  check_vars(*this, o);
  Poly r = *this;
  for (const auto& [e, c] : o.terms) {
    Rat& slot = r.terms[e];
    slot += c;
    if (slot == 0) r.terms.erase(e);
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o * Rat(-1); }

Poly Poly::operator*(const Poly& o) const {
  check_vars(*this, o);
  Poly r = zero(nvars);
  for (const auto& [ea, ca] : terms)
    for (const auto& [eb, cb] : o.terms) {
      std::vector<unsigned> e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      Rat& slot = r.terms[e];
      slot += ca * cb;
      if (slot == 0) r.terms.erase(e);
    }
  return r;
}

Poly Poly::operator*(const Rat& s) const {
  Poly r = zero(nvars);
  if (s == 0) return r;
  for (const auto& [e, c] : terms) r.terms[e] = c * s;
  return r;
}

int Poly::degree() const {
  if (terms.empty()) return -1;
  unsigned d = 0;
  for (unsigned e : terms.rbegin()->first) d += e;
  return int(d);
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if (int(point.size()) != nvars) throw std::invalid_argument("Poly::eval: point size");
  Rat acc = 0;
  for (const auto& [e, c] : terms) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (unsigned j = 0; j < e[i]; ++j) t *= point[i];
    acc += t;
  }
  return acc;
}

std::string poly_str(const Poly& p, const std::vector<std::string>& var_names) {
  if (p.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest-degree terms first
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat coeff = c;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    bool has_var = false;
    for (unsigned ex : e)
      if (ex) has_var = true;
    if (coeff != 1 || !has_var) os << rat_str(coeff);
    bool need_star = (coeff != 1 || !has_var);
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (need_star) os << "*";
      os << var_names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

Matrix PolyMap::eval(const std::vector<Rat>& point) const {
  Matrix r(int(comps.size()), 1);
  for (size_t i = 0; i < comps.size(); ++i) r.at(int(i), 0) = comps[i].eval(point);
  return r;
}

SymElement sym_constant(const LieAlgebra& L, int nvars, const Matrix& v) {
  SymElement z(size_t(L.dim()), Poly::zero(nvars));
  for (int i = 0; i < L.dim(); ++i) z[size_t(i)] = Poly::constant(nvars, v.at(i, 0));
  return z;
}

SymElement sym_apply(const Matrix& m, const SymElement& z) {
  if (m.cols() != int(z.size())) throw std::invalid_argument("sym_apply: size mismatch");
  int nvars = z.empty() ? 0 : z[0].nvars;
  SymElement r(size_t(m.rows()), Poly::zero(nvars));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) r[size_t(i)] = r[size_t(i)] + z[size_t(j)] * m.at(i, j);
  return r;
}

SymElement sym_add(const SymElement& a, const SymElement& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sym_add: size mismatch");
  SymElement r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

SymElement sym_scale(const SymElement& a, const Rat& s) {
  SymElement r = a;
  for (Poly& p : r) p = p * s;
  return r;
}

SymElement sym_bracket(const LieAlgebra& L, const SymElement& a, const SymElement& b) {
  int d = L.dim();
  int nvars = a.empty() ? 0 : a[0].nvars;
  SymElement r(size_t(d), Poly::zero(nvars));
  for (int i = 0; i < d; ++i) {
    if (a[size_t(i)].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (b[size_t(j)].is_zero()) continue;
      const Matrix& cij = L.structure(i, j);
      Poly prod = a[size_t(i)] * b[size_t(j)];
      for (int rr = 0; rr < d; ++rr)
        if (cij.at(rr, 0) != 0)
          r[size_t(rr)] = r[size_t(rr)] + prod * cij.at(rr, 0);
    }
  }
  return r;
}

SymElement sym_chart_point(const GradedFrame& fr) {
  Matrix P = fr.plus_embed(1);
  int nvars = P.cols();
  SymElement x(size_t(fr.dim()), Poly::zero(nvars));
  for (int j = 0; j < nvars; ++j) {
    Poly t = Poly::variable(nvars, j);
    for (int i = 0; i < fr.dim(); ++i)
      if (P.at(i, j) != 0) x[size_t(i)] = x[size_t(i)] + t * P.at(i, j);
  }
  return x;
}

PolyMap realize(const GradedFrame& fr, const Matrix& Y, int i) {
  if (i < 1 || i > fr.k()) throw std::invalid_argument("realize: layer out of range");
  SymElement x = sym_chart_point(fr);
  int nvars = fr.plus_embed(1).cols();
  SymElement term = sym_constant(fr.algebra(), nvars, Y);
  SymElement acc = term;
  for (int j = 1; j <= 2 * fr.k(); ++j) {
    term = sym_scale(sym_bracket(fr.algebra(), x, term), Rat(-1) / Rat(j));
    acc = sym_add(acc, term);
  }
  SymElement out = sym_apply(fr.plus_proj(i), acc);
  PolyMap m;
  m.nvars = nvars;
  m.comps = std::move(out);
  return m;
}

PolyMap closed_form_3graded(const GradedFrame& fr, const Matrix& Y) {
  if (fr.k() != 1) throw std::invalid_argument("closed_form_3graded: needs k = 1");
  const LieAlgebra& L = fr.algebra();
  int nvars = fr.plus_embed(1).cols();
  SymElement x = sym_chart_point(fr);
  SymElement y = sym_constant(L, nvars, Y);
  SymElement out = sym_add(
      sym_add(y, sym_scale(sym_bracket(L, x, y), -1)),
      sym_scale(sym_bracket(L, x, sym_bracket(L, x, y)), Rat(1, 2)));
  PolyMap m;
  m.nvars = nvars;
  m.comps = sym_apply(fr.plus_proj(1), out);
  return m;
}

PolyMap restrict_to_layer(const GradedFrame& fr, const PolyMap& m, int deg) {
  // variable j belongs to the layer containing column j of the n+_1 frame
  std::vector<bool> zeroed(size_t(m.nvars), false);
  int off = 0;
  for (int d = 1; d <= fr.k(); ++d) {
    int dim = fr.grading().layer(d).dim();
    for (int j = 0; j < dim; ++j)
      if (d < deg) zeroed[size_t(off + j)] = true;
    off += dim;
  }
  PolyMap out;
  out.nvars = m.nvars;
  for (const Poly& p : m.comps) {
    Poly q = Poly::zero(m.nvars);
    for (const auto& [e, c] : p.terms) {
      bool keep = true;
      for (size_t j = 0; j < e.size(); ++j)
        if (e[j] && zeroed[j]) keep = false;
      if (keep) q.terms[e] = c;
    }
    out.comps.push_back(std::move(q));
  }
  return out;
}

PolyMap closed_form_5graded(const GradedFrame& fr, const Matrix& Y, int deg_Y, int i) {
  if (fr.k() != 2) throw std::invalid_argument("closed_form_5graded: needs k = 2");
  if (i < 1 || i > 2) throw std::invalid_argument("closed_form_5graded: i must be 1 or 2");
  if (deg_Y < -2 || deg_Y > 2)
    throw std::invalid_argument("closed_form_5graded: layer of Y out of range");
  const LieAlgebra& L = fr.algebra();
  int nvars = fr.plus_embed(1).cols();
  SymElement x = sym_chart_point(fr);
  SymElement x1 = sym_apply(fr.proj(1), x);
  SymElement x2 = sym_apply(fr.proj(2), x);
  SymElement y = sym_constant(L, nvars, fr.project(Y, deg_Y));
  auto br = [&](const SymElement& a, const SymElement& b) { return sym_bracket(L, a, b); };
  SymElement out(size_t(fr.dim()), Poly::zero(nvars));
  if (i == 1) {
    switch (deg_Y) {
      case 2:
        out = y;
        break;
      case 1:
        out = sym_add(y, sym_scale(br(x, y), -1));
        break;
      case 0:
        out = sym_add(sym_add(sym_scale(br(x1, y), -1), sym_scale(br(x2, y), -1)),
                      sym_scale(br(x1, br(x1, y)), Rat(1, 2)));
        break;
      case -1:
        out = sym_add(
            sym_add(sym_scale(br(x2, y), -1), sym_scale(br(x1, br(x1, y)), Rat(1, 2))),
            sym_add(br(x1, br(x2, y)), sym_scale(br(x1, br(x1, br(x1, y))), Rat(-1, 6))));
        break;
      case -2:
        out = sym_add(
            sym_add(sym_add(br(x1, br(x2, y)),
                            sym_scale(br(x1, br(x1, br(x1, y))), Rat(-1, 6))),
                    sym_add(sym_scale(br(x2, br(x2, y)), Rat(1, 2)),
                            sym_scale(br(x1, br(x1, br(x2, y))), Rat(-1, 2)))),
            sym_scale(br(x1, br(x1, br(x1, br(x1, y)))), Rat(1, 24)));
        break;
    }
  } else {
    // on the restricted domain x in g_2 only
    switch (deg_Y) {
      case 2:
        out = y;
        break;
      case 0:
        out = sym_scale(br(x2, y), -1);
        break;
      case -2:
        out = sym_scale(br(x2, br(x2, y)), Rat(1, 2));
        break;
      default:
        break;  // odd layers restrict to zero
    }
  }
  PolyMap m;
  m.nvars = nvars;
  m.comps = sym_apply(fr.plus_proj(i), out);
  return m;
}

static std::vector<Rat> chart_coords_of(const GradedFrame& fr, const Matrix& x) {
  Matrix c = fr.plus_proj(1) * x;
  std::vector<Rat> pt(size_t(c.rows()));
  for (int i = 0; i < c.rows(); ++i) pt[size_t(i)] = c.at(i, 0);
  return pt;
}

bool transform_check(const GradedFrame& fr, const GroupElement& g, const Matrix& Y,
                     int i, const Matrix& x) {
  ChartResult gx = act_in_chart(fr, g, x);
  if (!gx.value) return false;
  Matrix lhs = realize(fr, g.inv * Y, i).eval(chart_coords_of(fr, x));
  Matrix rhs = denominator(fr, g, x, i) * compressed_exp_plus(fr, *gx.value, i) *
               realize(fr, Y, i).eval(chart_coords_of(fr, *gx.value));
  return lhs == rhs;
}

std::vector<std::string> chart_var_names(const GradedFrame& fr) {
  int n = fr.plus_embed(1).cols();
  std::vector<std::string> names;
  for (int j = 1; j <= n; ++j) names.push_back("x" + std::to_string(j));
  return names;
}

}  // namespace gfg
