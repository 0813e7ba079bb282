#include "gfg/subspace.hpp"

#include <stdexcept>

namespace gfg {

Subspace Subspace::from_columns(int ambient_dim, const Matrix& cols) {
  if (cols.cols() > 0 && cols.rows() != ambient_dim)
    throw std::invalid_argument("subspace: column length != ambient dimension");
  Subspace s;
  s.ambient_ = ambient_dim;
  RrefResult r = rref_full(cols.transposed());
  Matrix b(ambient_dim, r.rank);
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < ambient_dim; ++j) b.at(j, i) = r.mat.at(i, j);
  s.basis_ = b;
  return s;
}

Subspace Subspace::zero(int ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix(ambient_dim, 0);
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  return from_columns(ambient_dim, Matrix::identity(ambient_dim));
}

bool Subspace::contains(const Matrix& v) const {
  if (v.rows() != ambient_ || v.cols() != 1)
    throw std::invalid_argument("contains: bad vector shape");
  if (dim() == 0) return v.is_zero();
  auto x = solve(basis_, v);
  return x.has_value() && (basis_ * *x) == v;
}

bool Subspace::contains(const Subspace& s) const {
  if (s.ambient_ != ambient_) throw std::invalid_argument("contains: ambient mismatch");
  for (int c = 0; c < s.dim(); ++c)
    if (!contains(s.basis_.col(c))) return false;
  return true;
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient())
    throw std::invalid_argument("intersect: ambient mismatch");
  int n = u.ambient();
  if (u.dim() == 0 || v.dim() == 0) return Subspace::zero(n);
  // Solve U a = V b: kernel of [U | -V]; the U-part of each kernel vector
  // spans the intersection.
  Matrix stacked = Matrix::hcat(u.basis(), -v.basis());
  Matrix k = kernel_basis(stacked);
  Matrix cols(n, k.cols());
  for (int c = 0; c < k.cols(); ++c) {
    Matrix a(u.dim(), 1);
    for (int i = 0; i < u.dim(); ++i) a.at(i, 0) = k.at(i, c);
    cols.set_col(c, u.basis() * a);
  }
  return Subspace::from_columns(n, cols);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw std::invalid_argument("sum: ambient mismatch");
  return Subspace::from_columns(u.ambient(), Matrix::hcat(u.basis(), v.basis()));
}

bool is_direct_sum(const std::vector<Subspace>& parts, int ambient_dim) {
  int total = 0;
  Matrix all(ambient_dim, 0);
  for (const Subspace& p : parts) {
    if (p.ambient() != ambient_dim)
      throw std::invalid_argument("is_direct_sum: ambient mismatch");
    total += p.dim();
    all = Matrix::hcat(all, p.basis());
  }
  if (total != ambient_dim) return false;
  return rref_full(all).rank == ambient_dim;
}

Subspace kernel(const Matrix& m) {
  return Subspace::from_columns(m.cols(), kernel_basis(m));
}

Subspace image(const Matrix& m) { return Subspace::from_columns(m.rows(), m); }

Subspace apply(const Matrix& g, const Subspace& s) {
  if (g.cols() != s.ambient()) throw std::invalid_argument("apply: dimension mismatch");
  return Subspace::from_columns(g.rows(), g * s.basis());
}

}  // namespace gfg
