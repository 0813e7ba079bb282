#ifndef GFG_ELEMENTARY_GROUP_HPP
#define GFG_ELEMENTARY_GROUP_HPP

#include "gfg/filtration.hpp"

namespace gfg {

// Element of the projective elementary group, carried as an exact
// automorphism matrix together with its generator word: a product of
// e^{ad v} factors with v in n+_1 (sign +1) or n-_1 (sign -1).
struct GroupElement {
  Matrix matrix;
  Matrix inv;  // exact inverse, maintained alongside
  struct Letter {
    int sign;  // +1 or -1
    Matrix v;  // full-algebra coordinate column
  };
  std::vector<Letter> word;
};

GroupElement identity_element(const GradedFrame& fr);

// Single-letter e^{ad v}; v must lie in n+_1 (sign +1) or n-_1 (sign -1).
GroupElement exp_ad(const GradedFrame& fr, const Matrix& v, int sign);

GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);

// Denominator d_g(x)_i = pr_{n+_i} (e^{-ad x} g^{-1}) i_{n+_i}; x in n+_1.
Matrix denominator(const GradedFrame& fr, const GroupElement& g, const Matrix& x, int i);

// Co-denominator c_g(x)_i = pr_{n-_i} (g e^{ad x}) i_{n-_i}.
Matrix codenominator(const GradedFrame& fr, const GroupElement& g, const Matrix& x, int i);

// Generalized Bergman operators B+(x,w)_i = d_{e^{ad w}}(x)_i and
// B-(w,x)_i = c_{e^{ad w}}(x)_i, with x in n+_1, w in n-_1.
Matrix bergman(const GradedFrame& fr, const Matrix& x, const Matrix& w, int i, int sign);

// Numerator n_g(x) = pr_{n+_1}(e^{-ad x} g^{-1} E); requires an inner grading.
Matrix numerator(const GradedFrame& fr, const GroupElement& g, const Matrix& x);

// Compression pr_{n+_i} e^{ad y} i_{n+_i} (the inverse of d_Id(y)_i).
Matrix compressed_exp_plus(const GradedFrame& fr, const Matrix& y, int i);

// psi_n: the degree-n part of E - e^{ad v}E that depends only on the
// components of v below degree n. Input v is truncated to layers < n.
Matrix psi(const GradedFrame& fr, int n, const Matrix& v);

struct ChartResult {
  std::optional<Matrix> value;  // g.x in full-algebra coordinates
  int failed_layer = 0;         // when absent: which determinant vanished
  char failed_side = 0;         // 'd' or 'c'
};

// Birational chart action: layer-by-layer recovery of g.x from the
// numerator/denominator data; absent when the point leaves the chart.
ChartResult act_in_chart(const GradedFrame& fr, const GroupElement& g, const Matrix& x);

bool in_omega_plus(const GradedFrame& fr, const GroupElement& g);

struct OmegaTriple {
  Matrix v;  // n+_1 coordinates (full-algebra column)
  Matrix h;  // grading-preserving automorphism
  Matrix w;  // n-_1 coordinates
};

// Unique factorization g = e^{ad v} h e^{ad w} over Omega+; absent when
// g.0 leaves the chart.
std::optional<OmegaTriple> omega_decompose(const GradedFrame& fr, const GroupElement& g);

}  // namespace gfg

#endif
