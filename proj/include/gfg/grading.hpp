#ifndef GFG_GRADING_HPP
#define GFG_GRADING_HPP

#include <optional>

#include "gfg/lie_algebra.hpp"

namespace gfg {

// A (2k+1)-grading: eigenspace layers of a characteristic derivation D,
// with an optional Euler element E satisfying ad E = D.
struct Grading {
  int k = 0;
  std::vector<Subspace> layers;  // index deg + k, deg in [-k, k]
  Matrix char_derivation;
  std::optional<Matrix> euler;  // coordinate column
  int effective_k = 0;          // max |n| with layer(n) != 0

  const Subspace& layer(int deg) const { return layers[size_t(deg + k)]; }
};

// Product (D - k I)...(D + k I); the grading derivation annihilator.
Matrix grading_polynomial(const Matrix& D, int k);

Grading grading_from_euler(const LieAlgebra& L, const Element& E, int k);
Grading grading_from_derivation(const LieAlgebra& L, const Matrix& D, int k);
Grading grading_from_layers(const LieAlgebra& L, std::vector<Subspace> layers, int k,
                            std::optional<Matrix> euler);

Report validate_grading(const LieAlgebra& L, const Grading& G);

// Solves ad E = D for E (free coordinates zeroed); nullopt when D is outer.
// Throws when D is not a derivation.
std::optional<Element> euler_from_derivation(const LieAlgebra& L, const Matrix& D);

// Same grading with layers reversed and D negated; swaps plus and minus
// filtrations.
Grading opposite(const Grading& G);

// Cached coordinate frames of a validated grading: the full layer basis, its
// inverse, layer projections, and the n+_i / n-_i frames used everywhere in
// the group and geometry code. Layer columns are ordered by ascending degree
// within each frame.
class GradedFrame {
 public:
  GradedFrame(const LieAlgebra& L, const Grading& G);

  const LieAlgebra& algebra() const { return *L_; }
  const Grading& grading() const { return *G_; }
  int k() const { return G_->k; }
  int dim() const { return L_->dim(); }

  // d x d projector onto layer deg along the other layers.
  const Matrix& proj(int deg) const { return projectors_[size_t(deg + k())]; }
  Matrix project(const Matrix& v, int deg) const { return proj(deg) * v; }

  // n+_i = g_i + ... + g_k, n-_i = g_{-k} + ... + g_{-i}, for 1 <= i <= k.
  Matrix plus_embed(int i) const;   // d x m_i
  Matrix plus_proj(int i) const;    // m_i x d
  Matrix minus_embed(int i) const;  // d x m_i
  Matrix minus_proj(int i) const;
  int plus_dim(int i) const;
  int minus_dim(int i) const;

  // Layer-frame basis of degrees lo..hi (ascending), as columns.
  Matrix layer_embed(int lo, int hi) const;

  // Membership tests against the layer decomposition.
  bool in_plus_part(const Matrix& v) const;   // v in n+_1
  bool in_minus_part(const Matrix& v) const;  // v in n-_1

  const Matrix& basis() const { return B_; }
  const Matrix& basis_inv() const { return Binv_; }
  // Column offset of layer deg inside basis().
  int layer_offset(int deg) const { return offsets_[size_t(deg + k())]; }

 private:
  const LieAlgebra* L_;
  const Grading* G_;
  Matrix B_, Binv_;
  std::vector<int> offsets_;
  std::vector<Matrix> projectors_;
};

}  // namespace gfg

#endif
