#include "gfg/flag_geometry.hpp"

#include <stdexcept>

namespace gfg {

static void check_side(int side) {
  if (side != 1 && side != -1) throw std::invalid_argument("side must be +-1");
}

Filtration base_filtration(const GradedFrame& fr, int side) {
  check_side(side);
  if (side == 1) return minus_filtration(fr.grading());
  return plus_filtration(fr.grading());
}

Filtration act_on_filtration(const GroupElement& g, const Filtration& f) {
  return apply(g.matrix, f);
}

GeometryPoint make_point(const GradedFrame& fr, int side, const GroupElement& witness) {
  check_side(side);
  GeometryPoint pt;
  pt.side = side;
  pt.witness = witness;
  pt.filtration = apply(witness.matrix, base_filtration(fr, side));
  return pt;
}

std::optional<GeometryPoint> rewitness(const GradedFrame& fr, int side,
                                       const Filtration& f) {
  check_side(side);
  const LieAlgebra& L = fr.algebra();
  try {
    if (side == 1) {
      Element v = chart_coordinates(L, fr.grading(), f);
      return make_point(fr, 1, exp_ad(fr, v.coords, 1));
    }
    Grading opp = opposite(fr.grading());
    Element v = chart_coordinates(L, opp, f);
    return make_point(fr, -1, exp_ad(fr, v.coords, -1));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

Matrix tangent_rep(const GradedFrame& fr, const GroupElement& p, int i, int sign) {
  Filtration nminus = minus_filtration(fr.grading());
  if (apply(p.matrix, nminus) != nminus)
    throw std::invalid_argument("tangent_rep: p does not stabilize the base point");
  Matrix zero(fr.dim(), 1);
  if (sign == 1) {
    auto inv = invert(denominator(fr, p, zero, i));
    if (!inv) throw std::logic_error("tangent_rep: stabilizer denominator singular");
    return *inv;
  }
  if (sign == -1) return codenominator(fr, p, zero, i);
  throw std::invalid_argument("tangent_rep: sign must be +-1");
}

Matrix section_value(const GradedFrame& fr, const Matrix& Y, const GeometryPoint& pt,
                     int i) {
  if (pt.side != 1)
    throw std::invalid_argument("section_value: point must lie on the plus side");
  return fr.plus_proj(i) * (pt.witness.inv * Y);
}

// Frame of step i of a point's filtration, carried by its witness.
static Matrix step_frame(const GradedFrame& fr, const GeometryPoint& pt, int i) {
  Matrix e = (pt.side == 1) ? fr.minus_embed(i) : fr.plus_embed(i);
  return pt.witness.matrix * e;
}

// Witness-carried complement of step -i+1 of a point's filtration.
static Matrix complement_frame(const GradedFrame& fr, const GeometryPoint& pt, int i) {
  Matrix e = (pt.side == 1) ? fr.plus_embed(i) : fr.minus_embed(i);
  return pt.witness.matrix * e;
}

KernelMap kernel_map(const GradedFrame& fr, const GeometryPoint& src,
                     const GeometryPoint& dst, int i) {
  if (i < 1 || i > fr.k()) throw std::invalid_argument("kernel_map: layer out of range");
  if (src.side == dst.side)
    throw std::invalid_argument("kernel_map: points must lie on opposite sides");
  Matrix S = step_frame(fr, src, i);
  Matrix C = dst.filtration.step(-i + 1).basis();
  Matrix N = complement_frame(fr, dst, i);
  Matrix A = Matrix::hcat(C, N);
  KernelMap km;
  km.i = i;
  km.matrix = Matrix(N.cols(), S.cols());
  for (int c = 0; c < S.cols(); ++c) {
    auto sol = solve(A, S.col(c));
    if (!sol) throw std::logic_error("kernel_map: complement frame does not span");
    for (int r = 0; r < N.cols(); ++r) km.matrix.at(r, c) = sol->at(C.cols() + r, 0);
  }
  return km;
}

KernelMap canonical_kernel(const GradedFrame& fr, const GeometryPoint& m_pt,
                           const GeometryPoint& n_pt, int i) {
  if (m_pt.side != -1 || n_pt.side != 1)
    throw std::invalid_argument("canonical_kernel: expected sides (-, +)");
  return kernel_map(fr, m_pt, n_pt, i);
}

bool kernel_transversality(const GradedFrame& fr, const GeometryPoint& m_pt,
                           const GeometryPoint& n_pt) {
  for (int i = 1; i <= fr.k(); ++i) {
    for (const auto* pair : {&m_pt, &n_pt}) {
      const GeometryPoint& a = *pair;
      const GeometryPoint& b = (pair == &m_pt) ? n_pt : m_pt;
      Matrix K = kernel_map(fr, a, b, i).matrix;
      if (K.rows() != K.cols() || det(K) == 0) return false;
    }
  }
  return true;
}

static GeometryPoint acted_point(const GradedFrame& fr, const GroupElement& g,
                                 const GeometryPoint& pt) {
  Filtration f = act_on_filtration(g, pt.filtration);
  auto rp = rewitness(fr, pt.side, f);
  if (rp) return *rp;
  GeometryPoint out;
  out.side = pt.side;
  out.filtration = f;
  out.witness = compose(g, pt.witness);
  return out;
}

// Matrix of the map induced by g between witness-carried frames: solves
// frame_out * T = g * frame_in column by column.
static Matrix induced_map(const Matrix& frame_out, const Matrix& g,
                          const Matrix& frame_in) {
  Matrix rhs = g * frame_in;
  Matrix T(frame_out.cols(), frame_in.cols());
  for (int c = 0; c < frame_in.cols(); ++c) {
    auto sol = solve(frame_out, rhs.col(c));
    if (!sol) throw std::logic_error("induced map leaves the carried frame");
    T.set_col(c, *sol);
  }
  return T;
}

bool kernel_equivariance_check(const GradedFrame& fr, const GroupElement& g,
                               const GeometryPoint& m_pt, const GeometryPoint& n_pt,
                               int i) {
  GeometryPoint gm = acted_point(fr, g, m_pt);
  GeometryPoint gn = acted_point(fr, g, n_pt);
  Matrix K = kernel_map(fr, m_pt, n_pt, i).matrix;
  Matrix Kg = kernel_map(fr, gm, gn, i).matrix;
  // source side: g between step-i frames of m and g.m
  Matrix A = induced_map(step_frame(fr, gm, i), g.matrix, step_frame(fr, m_pt, i));
  // target side: g between carried quotient frames of n and g.n, modulo the
  // step it quotients by
  Matrix C = gn.filtration.step(-i + 1).basis();
  Matrix N = complement_frame(fr, gn, i);
  Matrix full = induced_map(Matrix::hcat(C, N), g.matrix, complement_frame(fr, n_pt, i));
  Matrix Q(N.cols(), full.cols());
  for (int r = 0; r < N.cols(); ++r)
    for (int c = 0; c < full.cols(); ++c) Q.at(r, c) = full.at(C.cols() + r, c);
  return Kg * A == Q * K;
}

bool killing_duality_check(const GradedFrame& fr, const GeometryPoint& n_pt, int i) {
  Matrix kappa = killing_form(fr.algebra());
  if (det(kappa) == 0)
    throw std::domain_error("killing_duality_check: Killing form is degenerate");
  Matrix S = n_pt.filtration.step(i).basis();
  Matrix N = complement_frame(fr, n_pt, i);
  if (S.cols() != N.cols()) return false;
  Matrix P = S.transposed() * kappa * N;
  return det(P) != 0;
}

}  // namespace gfg
