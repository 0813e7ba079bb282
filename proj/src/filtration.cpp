#include "gfg/filtration.hpp"

#include <sstream>
#include <stdexcept>

namespace gfg {

Subspace Filtration::step(int deg) const {
  int amb = ambient();
  if (deg > k) return Subspace::zero(amb);
  if (deg <= -k) return Subspace::full(amb);
  return steps[size_t(k - deg)];
}

int Filtration::ambient() const {
  if (steps.empty()) throw std::logic_error("filtration: no steps");
  return steps[0].ambient();
}

Filtration plus_filtration(const Grading& G) {
  Filtration f;
  f.k = G.k;
  int amb = G.layer(0).ambient();
  Subspace acc = Subspace::zero(amb);
  for (int n = G.k; n >= -G.k + 1; --n) {
    acc = sum(acc, G.layer(n));
    f.steps.push_back(acc);
  }
  return f;
}

Filtration minus_filtration(const Grading& G) {
  Filtration f;
  f.k = G.k;
  int amb = G.layer(0).ambient();
  Subspace acc = Subspace::zero(amb);
  for (int n = -G.k; n <= G.k - 1; ++n) {
    acc = sum(acc, G.layer(n));
    f.steps.push_back(acc);
  }
  return f;
}

Report is_filtration(const LieAlgebra& L, const Filtration& f) {
  Report rep;
  int k = f.k;
  if (int(f.steps.size()) != 2 * k)
    rep.violations.push_back("expected 2k steps");
  for (int n = k; n > -k + 1; --n) {
    if (!f.step(n - 1).contains(f.step(n))) {
      std::ostringstream os;
      os << "nesting fails: n_" << n << " not contained in n_" << n - 1;
      rep.violations.push_back(os.str());
    }
  }
  for (int m = k; m >= -k; --m)
    for (int n = m; n >= -k; --n) {
      Subspace sm = f.step(m), sn = f.step(n);
      Subspace target = f.step(std::min(m + n, k + 1));
      bool bad = false;
      for (int a = 0; a < sm.dim() && !bad; ++a)
        for (int b = 0; b < sn.dim() && !bad; ++b) {
          Matrix v = bracket(L, sm.basis().col(a), sn.basis().col(b));
          if (!target.contains(v)) bad = true;
        }
      if (bad) {
        std::ostringstream os;
        os << "[n_" << m << ", n_" << n << "] not contained in n_" << m + n;
        rep.violations.push_back(os.str());
      }
    }
  return rep;
}

bool is_transversal(const Filtration& e, const Filtration& f) {
  if (e.k != f.k) throw std::invalid_argument("is_transversal: mismatched k");
  int amb = e.ambient();
  if (amb != f.ambient()) throw std::invalid_argument("is_transversal: ambient mismatch");
  for (int n = -e.k + 1; n <= e.k; ++n) {
    Subspace a = e.step(n), b = f.step(-n + 1);
    if (a.dim() + b.dim() != amb) return false;
    if (sum(a, b).dim() != amb) return false;
  }
  return true;
}

Grading grading_from_transversal(const LieAlgebra& L, const Filtration& m,
                                 const Filtration& n) {
  if (!is_transversal(m, n))
    throw std::invalid_argument("grading_from_transversal: filtrations not transversal");
  int k = m.k;
  std::vector<Subspace> layers;
  for (int j = -k; j <= k; ++j) layers.push_back(intersect(m.step(j), n.step(-j)));
  Grading G = grading_from_layers(L, std::move(layers), k, std::nullopt);
  auto E = euler_from_derivation(L, G.char_derivation);
  if (E) G.euler = E->coords;
  return G;
}

Subspace u_of(const LieAlgebra& L, const Filtration& n) {
  int d = L.dim();
  // rows of constraints on vec(X), row-major: X[a][b] at index a*d+b
  std::vector<std::vector<Rat>> rows;
  auto add_row = [&](std::vector<Rat> r) { rows.push_back(std::move(r)); };
  // derivation: X[b_i,b_j] - [X b_i, b_j] - [b_i, X b_j] = 0
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const Matrix& cij = L.structure(i, j);
      // coordinate r of the constraint, as linear form in X entries
      // X cij: row r gets sum_b cij[b] * X[r][b]
      // [X e_i, e_j]: X e_i = column i of X -> bracket with e_j:
      //   ([X e_i, e_j])_r = sum_a X[a][i] * c(a,j)_r
      for (int r = 0; r < d; ++r) {
        std::vector<Rat> row(size_t(d) * d);
        for (int b = 0; b < d; ++b)
          if (cij.at(b, 0) != 0) row[size_t(r) * d + b] += cij.at(b, 0);
        for (int a = 0; a < d; ++a) {
          const Rat& caj = L.structure(a, j).at(r, 0);
          if (caj != 0) row[size_t(a) * d + i] -= caj;
          const Rat& cia = L.structure(i, a).at(r, 0);
          if (cia != 0) row[size_t(a) * d + j] -= cia;
        }
        bool nz = false;
        for (const Rat& x : row)
          if (x != 0) { nz = true; break; }
        if (nz) add_row(std::move(row));
      }
    }
  // step raising: X n_j <= n_{j+1} for j in [-k, k]
  for (int j = -n.k; j <= n.k; ++j) {
    Subspace src = n.step(j), dst = n.step(j + 1);
    if (src.dim() == 0) continue;
    // annihilator rows of dst: N^T z = 0 iff z in dst
    Matrix ann = kernel_basis(dst.basis().transposed());  // d x (d - dim dst)
    for (int c = 0; c < src.dim(); ++c) {
      Matrix v = src.basis().col(c);
      for (int rcol = 0; rcol < ann.cols(); ++rcol) {
        std::vector<Rat> row(size_t(d) * d);
        for (int a = 0; a < d; ++a) {
          if (ann.at(a, rcol) == 0) continue;
          for (int b = 0; b < d; ++b)
            if (v.at(b, 0) != 0) row[size_t(a) * d + b] += ann.at(a, rcol) * v.at(b, 0);
        }
        add_row(std::move(row));
      }
    }
  }
  Matrix A(int(rows.size()), d * d);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < d * d; ++j) A.at(int(i), j) = rows[i][size_t(j)];
  return kernel(A);
}

Matrix nilpotent_exp(const Matrix& X, int bound) {
  if (X.rows() != X.cols()) throw std::invalid_argument("nilpotent_exp: non-square");
  Matrix pw = Matrix::identity(X.rows());
  Matrix acc = pw;
  Rat fact = 1;
  for (int j = 1; j <= bound; ++j) {
    pw = pw * X;
    fact *= Rat(j);
    acc = acc + pw * (Rat(1) / fact);
  }
  if (!(pw * X).is_zero())
    throw std::invalid_argument("nilpotent_exp: X not nilpotent within bound");
  return acc;
}

Filtration apply(const Matrix& g, const Filtration& f) {
  Filtration r;
  r.k = f.k;
  for (const Subspace& s : f.steps) r.steps.push_back(apply(g, s));
  return r;
}

Matrix torsor_iterate(const Matrix& D, const Matrix& W, int k, int* rounds) {
  Matrix Y = -W;
  int used = 1;
  for (int n = 2; n <= 2 * k; ++n) {
    Matrix R = nilpotent_exp(Y, 2 * k) * D * nilpotent_exp(-Y, 2 * k) - D - W;
    if (R.is_zero()) break;
    Y = Y + R * (Rat(1) / Rat(n));
    ++used;
  }
  if (nilpotent_exp(Y, 2 * k) * D * nilpotent_exp(-Y, 2 * k) != D + W)
    throw std::logic_error("torsor iteration failed to converge");
  if (rounds) *rounds = used;
  return Y;
}

Matrix torsor_solve(const LieAlgebra& L, const Grading& G0, const Filtration& m_target) {
  Filtration nplus = plus_filtration(G0);
  if (!is_transversal(m_target, nplus))
    throw std::invalid_argument("torsor_solve: target not transversal to n+");
  Grading Gp = grading_from_transversal(L, nplus, m_target);
  Matrix W = Gp.char_derivation - G0.char_derivation;
  return torsor_iterate(G0.char_derivation, W, G0.k);
}

Element chart_coordinates(const LieAlgebra& L, const Grading& G0, const Filtration& m) {
  if (!G0.euler)
    throw std::invalid_argument("chart_coordinates: grading is not inner");
  Matrix X = torsor_solve(L, G0, m);
  GradedFrame fr(L, G0);
  Matrix P = fr.plus_embed(1);
  int d = L.dim(), mdim = P.cols();
  Matrix A(d * d, mdim), rhs(d * d, 1);
  for (int j = 0; j < mdim; ++j) {
    Matrix aj = ad(L, P.col(j));
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) A.at(r * d + c, j) = aj.at(r, c);
  }
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) rhs.at(r * d + c, 0) = X.at(r, c);
  auto sol = solve(A, rhs);
  if (!sol) throw std::logic_error("chart_coordinates: ad v = X has no solution in n+_1");
  return Element(L, P * *sol);
}

}  // namespace gfg
