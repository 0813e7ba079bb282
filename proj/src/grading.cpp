#include "gfg/grading.hpp"

#include <sstream>
#include <stdexcept>

namespace gfg {

Matrix grading_polynomial(const Matrix& D, int k) {
  Matrix p = Matrix::identity(D.rows());
  for (int n = -k; n <= k; ++n)
    p = p * (D - Matrix::identity(D.rows()) * Rat(n));
  return p;
}

static int compute_effective_k(const std::vector<Subspace>& layers, int k) {
  int eff = 0;
  for (int n = -k; n <= k; ++n)
    if (layers[size_t(n + k)].dim() > 0 && std::abs(n) > eff) eff = std::abs(n);
  return eff;
}

Grading grading_from_layers(const LieAlgebra& L, std::vector<Subspace> layers, int k,
                            std::optional<Matrix> euler) {
  if (int(layers.size()) != 2 * k + 1)
    throw std::invalid_argument("grading: expected 2k+1 layers");
  if (!is_direct_sum(layers, L.dim()))
    throw std::invalid_argument("grading: layers are not a direct sum of the algebra");
  // D = sum of n * (projector onto layer n)
  Matrix B(L.dim(), 0);
  std::vector<int> degs;
  for (int n = -k; n <= k; ++n) {
    B = Matrix::hcat(B, layers[size_t(n + k)].basis());
    for (int c = 0; c < layers[size_t(n + k)].dim(); ++c) degs.push_back(n);
  }
  Matrix Binv = *invert(B);
  Matrix S(L.dim(), L.dim());
  for (int i = 0; i < L.dim(); ++i) S.at(i, i) = degs[size_t(i)];
  Grading G;
  G.k = k;
  G.layers = std::move(layers);
  G.char_derivation = B * S * Binv;
  G.euler = std::move(euler);
  G.effective_k = compute_effective_k(G.layers, k);
  return G;
}

Grading grading_from_derivation(const LieAlgebra& L, const Matrix& D, int k) {
  if (!is_derivation(L, D))
    throw std::invalid_argument("grading: the map is not a derivation");
  if (!grading_polynomial(D, k).is_zero())
    throw std::invalid_argument("not a (2k+1)-grading derivation");
  std::vector<Subspace> layers;
  for (int n = -k; n <= k; ++n)
    layers.push_back(kernel(D - Matrix::identity(L.dim()) * Rat(n)));
  if (!is_direct_sum(layers, L.dim()))
    throw std::logic_error("grading: eigenspaces fail to sum to the algebra");
  Grading G = grading_from_layers(L, std::move(layers), k, std::nullopt);
  G.char_derivation = D;
  return G;
}

Grading grading_from_euler(const LieAlgebra& L, const Element& E, int k) {
  if (E.alg != &L) throw std::invalid_argument("grading_from_euler: algebra mismatch");
  Grading G = grading_from_derivation(L, ad(E), k);
  G.euler = E.coords;
  return G;
}

Report validate_grading(const LieAlgebra& L, const Grading& G) {
  Report rep;
  int k = G.k;
  if (int(G.layers.size()) != 2 * k + 1) {
    rep.violations.push_back("layer count != 2k+1");
    return rep;
  }
  if (!is_direct_sum(G.layers, L.dim()))
    rep.violations.push_back("layers are not a direct sum of the algebra");
  // bracket compatibility on layer bases
  for (int m = -k; m <= k; ++m)
    for (int n = -k; n <= k; ++n) {
      const Subspace& um = G.layer(m);
      const Subspace& un = G.layer(n);
      Subspace target = (std::abs(m + n) > k) ? Subspace::zero(L.dim()) : G.layer(m + n);
      for (int a = 0; a < um.dim(); ++a)
        for (int b = 0; b < un.dim(); ++b) {
          Matrix v = bracket(L, um.basis().col(a), un.basis().col(b));
          if (!target.contains(v)) {
            std::ostringstream os;
            os << "[g_" << m << ", g_" << n << "] not contained in g_" << m + n;
            rep.violations.push_back(os.str());
            goto next_pair;
          }
        }
    next_pair:;
    }
  if (!grading_polynomial(G.char_derivation, k).is_zero())
    rep.violations.push_back("characteristic derivation violates the annihilator identity");
  for (int n = -k; n <= k; ++n) {
    const Subspace& layer = G.layer(n);
    for (int c = 0; c < layer.dim(); ++c) {
      Matrix v = layer.basis().col(c);
      if (G.char_derivation * v != v * Rat(n)) {
        std::ostringstream os;
        os << "D does not act as " << n << " on layer g_" << n;
        rep.violations.push_back(os.str());
        break;
      }
    }
  }
  if (!is_derivation(L, G.char_derivation))
    rep.violations.push_back("characteristic map is not a derivation");
  if (G.euler) {
    if (ad(L, *G.euler) != G.char_derivation)
      rep.violations.push_back("ad(euler) != characteristic derivation");
  }
  return rep;
}

std::optional<Element> euler_from_derivation(const LieAlgebra& L, const Matrix& D) {
  if (!is_derivation(L, D)) throw std::invalid_argument("euler_from_derivation: not a derivation");
  int d = L.dim();
  // columns: vec(ad b_j)
  Matrix A(d * d, d), rhs(d * d, 1);
  for (int j = 0; j < d; ++j) {
    Matrix e(d, 1);
    e.at(j, 0) = 1;
    Matrix aj = ad(L, e);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) A.at(r * d + c, j) = aj.at(r, c);
  }
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) rhs.at(r * d + c, 0) = D.at(r, c);
  auto x = solve(A, rhs);
  if (!x) return std::nullopt;
  return Element(L, *x);
}

Grading opposite(const Grading& G) {
  Grading O;
  O.k = G.k;
  O.layers.assign(G.layers.rbegin(), G.layers.rend());
  O.char_derivation = -G.char_derivation;
  if (G.euler) O.euler = -*G.euler;
  O.effective_k = G.effective_k;
  return O;
}

GradedFrame::GradedFrame(const LieAlgebra& L, const Grading& G) : L_(&L), G_(&G) {
  B_ = Matrix(L.dim(), 0);
  offsets_.resize(size_t(2 * G.k + 1));
  for (int n = -G.k; n <= G.k; ++n) {
    offsets_[size_t(n + G.k)] = B_.cols();
    B_ = Matrix::hcat(B_, G.layer(n).basis());
  }
  if (B_.cols() != L.dim())
    throw std::invalid_argument("graded frame: layers do not span the algebra");
  auto inv = invert(B_);
  if (!inv) throw std::invalid_argument("graded frame: layer basis singular");
  Binv_ = *inv;
  for (int n = -G.k; n <= G.k; ++n) {
    int off = layer_offset(n), len = G.layer(n).dim();
    Matrix sel(L.dim(), L.dim());
    for (int i = off; i < off + len; ++i) sel.at(i, i) = 1;
    projectors_.push_back(B_ * sel * Binv_);
  }
}

Matrix GradedFrame::layer_embed(int lo, int hi) const {
  Matrix m(dim(), 0);
  for (int n = lo; n <= hi; ++n) m = Matrix::hcat(m, G_->layer(n).basis());
  return m;
}

Matrix GradedFrame::plus_embed(int i) const { return layer_embed(i, k()); }
Matrix GradedFrame::minus_embed(int i) const { return layer_embed(-k(), -i); }

static Matrix rows_slice(const Matrix& m, int lo, int len) {
  Matrix r(len, m.cols());
  for (int i = 0; i < len; ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(lo + i, j);
  return r;
}

Matrix GradedFrame::plus_proj(int i) const {
  int off = layer_offset(i);
  return rows_slice(Binv_, off, plus_dim(i));
}

Matrix GradedFrame::minus_proj(int i) const {
  int off = layer_offset(-k());
  return rows_slice(Binv_, off, minus_dim(i));
}

int GradedFrame::plus_dim(int i) const {
  int d = 0;
  for (int n = i; n <= k(); ++n) d += G_->layer(n).dim();
  return d;
}

int GradedFrame::minus_dim(int i) const {
  int d = 0;
  for (int n = -k(); n <= -i; ++n) d += G_->layer(n).dim();
  return d;
}

bool GradedFrame::in_plus_part(const Matrix& v) const {
  Matrix acc(dim(), 1);
  for (int n = 1; n <= k(); ++n) acc = acc + project(v, n);
  return acc == v;
}

bool GradedFrame::in_minus_part(const Matrix& v) const {
  Matrix acc(dim(), 1);
  for (int n = 1; n <= k(); ++n) acc = acc + project(v, -n);
  return acc == v;
}

}  // namespace gfg
