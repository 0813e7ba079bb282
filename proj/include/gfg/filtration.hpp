#ifndef GFG_FILTRATION_HPP
#define GFG_FILTRATION_HPP

#include "gfg/grading.hpp"

namespace gfg {

// A (2k+1)-filtration n_k <= n_{k-1} <= ... <= n_{-k+1}, with n_{k+1} = 0
// and n_{-k} = g implicit.
struct Filtration {
  int k = 0;
  std::vector<Subspace> steps;  // steps[0] = n_k, ..., steps[2k-1] = n_{-k+1}

  // Step at degree deg, clamped: deg > k yields 0, deg <= -k yields g.
  Subspace step(int deg) const;
  int ambient() const;

  bool operator==(const Filtration& o) const { return k == o.k && steps == o.steps; }
  bool operator!=(const Filtration& o) const { return !(*this == o); }
};

Filtration plus_filtration(const Grading& G);
Filtration minus_filtration(const Grading& G);

// Validates nesting and bracket compatibility; report-style.
Report is_filtration(const LieAlgebra& L, const Filtration& f);

// g = e_n (+) f_{-n+1} at every level.
bool is_transversal(const Filtration& e, const Filtration& f);

// Theorem: transversal filtrations come from a grading, g_n = m_n /\ n_{-n}.
// Throws when the pair is not transversal.
Grading grading_from_transversal(const LieAlgebra& L, const Filtration& m,
                                 const Filtration& n);

// u(n) = { X in der(g) | X n_j <= n_{j+1} }, as a subspace of End(g)
// (ambient dim^2, row-major vec).
Subspace u_of(const LieAlgebra& L, const Filtration& n);

// Truncated exponential sum_{j<=bound} X^j/j!; requires X^{bound+1} = 0.
Matrix nilpotent_exp(const Matrix& X, int bound);

// Image filtration under an invertible map.
Filtration apply(const Matrix& g, const Filtration& f);

// Given the characteristic derivation D of the grading behind n = n+(G0) and
// an offset W in u(n), finds the unique Y in u(n) with e^Y D e^{-Y} = D + W
// by the (at most 2k+1 round) correction iteration. Also reports the number
// of rounds used.
Matrix torsor_iterate(const Matrix& D, const Matrix& W, int k, int* rounds = nullptr);

// The unique X in u(n+(G0)) with e^X . n-(G0) = m_target; requires
// m_target transversal to n+(G0).
Matrix torsor_solve(const LieAlgebra& L, const Grading& G0, const Filtration& m_target);

// The unique v in n+_1 with e^{ad v} . n-(G0) = m; requires the grading
// inner and m transversal to n+(G0).
Element chart_coordinates(const LieAlgebra& L, const Grading& G0, const Filtration& m);

}  // namespace gfg

#endif
