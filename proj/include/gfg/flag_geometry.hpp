#ifndef GFG_FLAG_GEOMETRY_HPP
#define GFG_FLAG_GEOMETRY_HPP

#include "gfg/elementary_group.hpp"

namespace gfg {

// Point of X+ (side +1, orbit of the base filtration n-(G0)) or X-
// (side -1, orbit of n+(G0)), certified by a witness group element.
struct GeometryPoint {
  int side = 0;  // +1 or -1
  Filtration filtration;
  GroupElement witness;
};

Filtration base_filtration(const GradedFrame& fr, int side);

Filtration act_on_filtration(const GroupElement& g, const Filtration& f);

GeometryPoint make_point(const GradedFrame& fr, int side, const GroupElement& witness);

// Re-witness a point through the chart when its filtration is transversal
// to the opposite base; nullopt otherwise.
std::optional<GeometryPoint> rewitness(const GradedFrame& fr, int side,
                                       const Filtration& f);

// rho+_i(p) = d_p(0)_i^{-1} (sign +1) or rho-_i(p) = c_p(0)_i (sign -1);
// p must stabilize the minus base filtration.
Matrix tangent_rep(const GradedFrame& fr, const GroupElement& p, int i, int sign);

// f_Y^{(i)} evaluated through the point's witness: pr_{n+_i}(w^{-1} Y),
// in n+_i frame coordinates. Requires side +1.
Matrix section_value(const GradedFrame& fr, const Matrix& Y, const GeometryPoint& pt,
                     int i);

struct KernelMap {
  int i = 0;
  Matrix matrix;  // source step-frame coords -> witness-carried complement coords
};

// K^{(i)}: step i of the source filtration -> g / (target step -i+1),
// the quotient realized on the complement carried by the target witness.
// Source and target must have opposite sides.
KernelMap kernel_map(const GradedFrame& fr, const GeometryPoint& src,
                     const GeometryPoint& dst, int i);

// Preferred orientation: src side -1, dst side +1.
KernelMap canonical_kernel(const GradedFrame& fr, const GeometryPoint& m_pt,
                           const GeometryPoint& n_pt, int i);

// All 2k kernel maps (both orders) square and invertible.
bool kernel_transversality(const GradedFrame& fr, const GeometryPoint& m_pt,
                           const GeometryPoint& n_pt);

// Checks K_{g.n,g.m} = T^{(i)}g o K_{n,m} o (T'^{(i)}g)^{-1} as matrices,
// re-witnessing the acted points through the chart when possible.
bool kernel_equivariance_check(const GradedFrame& fr, const GroupElement& g,
                               const GeometryPoint& m_pt, const GeometryPoint& n_pt,
                               int i);

// Nondegeneracy of the Killing pairing between step i and the carried
// complement at a point; throws std::domain_error when the Killing form is
// degenerate.
bool killing_duality_check(const GradedFrame& fr, const GeometryPoint& n_pt, int i);

}  // namespace gfg

#endif
