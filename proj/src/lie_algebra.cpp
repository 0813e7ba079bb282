#include "gfg/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace gfg {

LieAlgebra::LieAlgebra(std::vector<std::string> labels,
                       std::vector<std::vector<Matrix>> structure)
    : dim_(int(labels.size())), labels_(std::move(labels)), c_(std::move(structure)) {
  if (int(c_.size()) != dim_) throw std::invalid_argument("structure tensor: bad shape");
  for (const auto& row : c_) {
    if (int(row.size()) != dim_) throw std::invalid_argument("structure tensor: bad shape");
    for (const Matrix& v : row)
      if (v.rows() != dim_ || v.cols() != 1)
        throw std::invalid_argument("structure tensor: bad coordinate vector");
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j <= i; ++j)
      if (c_[i][j] != -c_[j][i])
        throw std::invalid_argument("structure tensor: antisymmetry violated at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
  // Jacobi on basis triples, cached
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (int k = j + 1; k < dim_; ++k) {
        // [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]]
        Matrix e_i(dim_, 1), e_j(dim_, 1), e_k(dim_, 1);
        e_i.at(i, 0) = 1; e_j.at(j, 0) = 1; e_k.at(k, 0) = 1;
        Matrix val = bracket(*this, e_i, c_[j][k]) + bracket(*this, e_j, c_[k][i]) +
                     bracket(*this, e_k, c_[i][j]);
        if (!val.is_zero()) {
          std::ostringstream os;
          os << "Jacobi fails on basis triple (" << i << "," << j << "," << k << ")";
          jacobi_.violations.push_back(os.str());
        }
      }
}

Element element(const LieAlgebra& L, const std::vector<Rat>& coords) {
  if (int(coords.size()) != L.dim())
    throw std::invalid_argument("element: coordinate count != dim");
  Matrix c(L.dim(), 1);
  for (int i = 0; i < L.dim(); ++i) c.at(i, 0) = coords[i];
  return Element(L, c);
}

Element zero_element(const LieAlgebra& L) { return Element(L, Matrix(L.dim(), 1)); }

Element basis_element(const LieAlgebra& L, int i) {
  Matrix c(L.dim(), 1);
  c.at(i, 0) = 1;
  return Element(L, c);
}

Matrix bracket(const LieAlgebra& L, const Matrix& x, const Matrix& y) {
  if (x.rows() != L.dim() || y.rows() != L.dim() || x.cols() != 1 || y.cols() != 1)
    throw std::invalid_argument("bracket: bad coordinate shape");
  Matrix z(L.dim(), 1);
  for (int i = 0; i < L.dim(); ++i) {
    if (x.at(i, 0) == 0) continue;
    for (int j = 0; j < L.dim(); ++j) {
      if (y.at(j, 0) == 0) continue;
      const Matrix& c = L.structure(i, j);
      Rat f = x.at(i, 0) * y.at(j, 0);
      for (int r = 0; r < L.dim(); ++r)
        if (c.at(r, 0) != 0) z.at(r, 0) += f * c.at(r, 0);
    }
  }
  return z;
}

Element bracket(const Element& x, const Element& y) {
  if (x.alg != y.alg) throw std::invalid_argument("bracket: algebra mismatch");
  return Element(*x.alg, bracket(*x.alg, x.coords, y.coords));
}

Matrix ad(const LieAlgebra& L, const Matrix& x) {
  Matrix m(L.dim(), L.dim());
  for (int j = 0; j < L.dim(); ++j) {
    Matrix e(L.dim(), 1);
    e.at(j, 0) = 1;
    m.set_col(j, bracket(L, x, e));
  }
  return m;
}

Matrix ad(const Element& x) { return ad(*x.alg, x.coords); }

Matrix killing_form(const LieAlgebra& L) {
  int d = L.dim();
  std::vector<Matrix> ads;
  ads.reserve(d);
  for (int i = 0; i < d; ++i) {
    Matrix e(d, 1);
    e.at(i, 0) = 1;
    ads.push_back(ad(L, e));
  }
  Matrix b(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Rat t = (ads[i] * ads[j]).trace();
      b.at(i, j) = t;
      b.at(j, i) = t;
    }
  return b;
}

bool is_derivation(const LieAlgebra& L, const Matrix& m) {
  int d = L.dim();
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument("is_derivation: bad shape");
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Matrix e_i(d, 1), e_j(d, 1);
      e_i.at(i, 0) = 1; e_j.at(j, 0) = 1;
      Matrix lhs = m * L.structure(i, j);
      Matrix rhs = bracket(L, m * e_i, e_j) + bracket(L, e_i, m * e_j);
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_automorphism(const LieAlgebra& L, const Matrix& g) {
  int d = L.dim();
  if (g.rows() != d || g.cols() != d)
    throw std::invalid_argument("is_automorphism: bad shape");
  if (det(g) == 0) return false;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Matrix e_i(d, 1), e_j(d, 1);
      e_i.at(i, 0) = 1; e_j.at(j, 0) = 1;
      if (g * L.structure(i, j) != bracket(L, g * e_i, g * e_j)) return false;
    }
  return true;
}

}  // namespace gfg
