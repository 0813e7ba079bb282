#ifndef GFG_LIE_ALGEBRA_HPP
#define GFG_LIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "gfg/subspace.hpp"

namespace gfg {

struct Report {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Finite-dimensional Lie algebra over Q given by its structure-constant
// tensor: structure(i, j) is the coordinate column of [b_i, b_j].
// Antisymmetry is enforced at construction; the Jacobi check runs once and
// is cached.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> labels,
             std::vector<std::vector<Matrix>> structure);

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& structure(int i, int j) const { return c_[i][j]; }

  const Report& check_jacobi() const { return jacobi_; }
  bool jacobi_ok() const { return jacobi_.ok(); }

 private:
  int dim_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Matrix>> c_;
  Report jacobi_;
};

struct Element {
  const LieAlgebra* alg = nullptr;
  Matrix coords;  // dim x 1

  Element() = default;
  Element(const LieAlgebra& a, Matrix c) : alg(&a), coords(std::move(c)) {}

  bool operator==(const Element& o) const {
    return alg == o.alg && coords == o.coords;
  }
};

Element element(const LieAlgebra& L, const std::vector<Rat>& coords);
Element zero_element(const LieAlgebra& L);
Element basis_element(const LieAlgebra& L, int i);

// [x, y]; throws on algebra mismatch.
Element bracket(const Element& x, const Element& y);
Matrix bracket(const LieAlgebra& L, const Matrix& x, const Matrix& y);

// Matrix of y -> [x, y] in the algebra basis.
Matrix ad(const LieAlgebra& L, const Matrix& x);
Matrix ad(const Element& x);

Matrix killing_form(const LieAlgebra& L);

bool is_derivation(const LieAlgebra& L, const Matrix& m);
bool is_automorphism(const LieAlgebra& L, const Matrix& g);

}  // namespace gfg

#endif
