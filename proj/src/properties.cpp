#include "gfg/properties.hpp"

#include <sstream>

namespace gfg {

Rat Rng::small_rat() {
  std::uniform_int_distribution<int> d(-3, 3);
  return Rat(d(eng_));
}

int Rng::pick(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(eng_);
}

Matrix Rng::small_vector(const Matrix& embed) {
  Matrix c(embed.cols(), 1);
  for (int i = 0; i < embed.cols(); ++i) c.at(i, 0) = small_rat();
  return embed * c;
}

Matrix Rng::plus_vector(const GradedFrame& fr) { return small_vector(fr.plus_embed(1)); }

Matrix Rng::minus_vector(const GradedFrame& fr) { return small_vector(fr.minus_embed(1)); }

GroupElement Rng::word(const GradedFrame& fr) {
  GroupElement g = identity_element(fr);
  int len = pick(1, 3);
  for (int i = 0; i < len; ++i) {
    int sign = pick(0, 1) ? 1 : -1;
    Matrix v = (sign == 1) ? plus_vector(fr) : minus_vector(fr);
    g = compose(g, exp_ad(fr, v, sign));
  }
  return g;
}

static void fail(PropertyReport& rep, const std::string& msg) {
  ++rep.failures;
  if (rep.messages.size() < 8) rep.messages.push_back(msg);
}

PropertyReport suite_grading(const CatalogEntry& entry) {
  PropertyReport rep;
  rep.name = "grading_axioms";
  rep.trials = 1;
  rep.checked = 1;
  Report v = validate_grading(entry.algebra, entry.grading);
  for (const auto& m : v.violations) fail(rep, m);
  Grading opp = opposite(entry.grading);
  Report vo = validate_grading(entry.algebra, opp);
  for (const auto& m : vo.violations) fail(rep, "opposite: " + m);
  return rep;
}

PropertyReport suite_transversality(const GradedFrame& fr, Rng& rng, int trials) {
  PropertyReport rep;
  rep.name = "transversality_grading";
  rep.trials = trials;
  const LieAlgebra& L = fr.algebra();
  Filtration np = plus_filtration(fr.grading());
  Filtration nm = minus_filtration(fr.grading());
  for (int t = 0; t < trials; ++t) {
    Filtration e = act_on_filtration(rng.word(fr), np);
    Filtration m = act_on_filtration(rng.word(fr), nm);
    if (!is_transversal(e, m)) continue;
    ++rep.checked;
    Grading G2 = grading_from_transversal(L, e, m);
    Report v = validate_grading(L, G2);
    for (const auto& msg : v.violations) fail(rep, msg);
    if (plus_filtration(G2) != e) fail(rep, "recovered grading loses plus filtration");
    if (minus_filtration(G2) != m) fail(rep, "recovered grading loses minus filtration");
  }
  return rep;
}

PropertyReport suite_torsor(const GradedFrame& fr, Rng& rng, int trials) {
  PropertyReport rep;
  rep.name = "torsor_uniqueness";
  rep.trials = trials;
  const LieAlgebra& L = fr.algebra();
  Filtration np = plus_filtration(fr.grading());
  Filtration nm = minus_filtration(fr.grading());
  for (int t = 0; t < trials; ++t) {
    Filtration m = act_on_filtration(rng.word(fr), nm);
    if (!is_transversal(m, np)) continue;
    ++rep.checked;
    Matrix X = torsor_solve(L, fr.grading(), m);
    if (!is_derivation(L, X)) fail(rep, "torsor solution is not a derivation");
    for (int j = -fr.k(); j <= fr.k(); ++j) {
      Subspace src = np.step(j), dst = np.step(j + 1);
      for (int c = 0; c < src.dim(); ++c)
        if (!dst.contains(X * src.basis().col(c))) {
          fail(rep, "torsor solution does not raise the plus filtration");
          goto raised;
        }
    }
  raised:
    if (apply(nilpotent_exp(X, 2 * fr.k()), nm) != m)
      fail(rep, "exp of torsor solution misses the target filtration");
  }
  return rep;
}

PropertyReport suite_chart(const GradedFrame& fr, Rng& rng, int trials) {
  PropertyReport rep;
  rep.name = "chart_action";
  rep.trials = trials;
  Filtration nm = minus_filtration(fr.grading());
  for (int t = 0; t < trials; ++t) {
    GroupElement g = rng.word(fr);
    GroupElement h = rng.word(fr);
    Matrix x = rng.plus_vector(fr);
    ChartResult idr = act_in_chart(fr, identity_element(fr), x);
    if (!idr.value || *idr.value != x) fail(rep, "identity does not act trivially");
    ChartResult hx = act_in_chart(fr, h, x);
    if (!hx.value) continue;
    ++rep.checked;
    // chart value must match the filtration-level action
    Filtration lhs = apply(nilpotent_exp(ad(fr.algebra(), *hx.value), 2 * fr.k()), nm);
    Filtration rhs = act_on_filtration(h, apply(
        nilpotent_exp(ad(fr.algebra(), x), 2 * fr.k()), nm));
    if (lhs != rhs) fail(rep, "chart action disagrees with the filtration action");
    ChartResult ghx = act_in_chart(fr, g, *hx.value);
    ChartResult comp = act_in_chart(fr, compose(g, h), x);
    if (ghx.value && comp.value && *ghx.value != *comp.value)
      fail(rep, "chart action is not compositional");
  }
  return rep;
}

PropertyReport suite_cocycle(const GradedFrame& fr, Rng& rng, int trials) {
  PropertyReport rep;
  rep.name = "denominator_cocycle";
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    GroupElement g = rng.word(fr);
    GroupElement h = rng.word(fr);
    Matrix x = rng.plus_vector(fr);
    ChartResult hx = act_in_chart(fr, h, x);
    if (!hx.value) continue;
    ++rep.checked;
    GroupElement gh = compose(g, h);
    for (int i = 1; i <= fr.k(); ++i) {
      Matrix mid = compressed_exp_plus(fr, -*hx.value, i);
      auto midinv = invert(mid);
      if (!midinv) {
        fail(rep, "compression of exp(-ad(h.x)) is singular");
        continue;
      }
      Matrix lhs = denominator(fr, gh, x, i);
      Matrix rhs = denominator(fr, h, x, i) * *midinv * denominator(fr, g, *hx.value, i);
      if (lhs != rhs) {
        std::ostringstream os;
        os << "denominator cocycle fails at layer " << i;
        fail(rep, os.str());
      }
    }
  }
  return rep;
}

PropertyReport suite_transform(const GradedFrame& fr, Rng& rng, int trials) {
  PropertyReport rep;
  rep.name = "realization_equivariance";
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    GroupElement g = rng.word(fr);
    Matrix x = rng.plus_vector(fr);
    if (!act_in_chart(fr, g, x).value) continue;
    ++rep.checked;
    Matrix Y(fr.dim(), 1);
    for (int i = 0; i < fr.dim(); ++i) Y.at(i, 0) = rng.small_rat();
    int i = rng.pick(1, fr.k());
    if (!transform_check(fr, g, Y, i, x)) {
      std::ostringstream os;
      os << "realized field equivariance fails at layer " << i;
      fail(rep, os.str());
    }
  }
  return rep;
}

PropertyReport suite_kernel(const GradedFrame& fr, Rng& rng, int trials) {
  PropertyReport rep;
  rep.name = "kernel_bergman";
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Matrix x = rng.plus_vector(fr);
    Matrix w = rng.minus_vector(fr);
    GeometryPoint n_pt = make_point(fr, 1, exp_ad(fr, x, 1));
    GeometryPoint m_pt = make_point(fr, -1, exp_ad(fr, w, -1));
    ++rep.checked;
    bool all_regular = true;
    for (int i = 1; i <= fr.k(); ++i) {
      Matrix K = canonical_kernel(fr, m_pt, n_pt, i).matrix;
      if (K != bergman(fr, x, -w, i, 1))
        fail(rep, "canonical kernel disagrees with the Bergman operator");
      if (K.rows() != K.cols() || det(K) == 0) all_regular = false;
      Matrix Kr = kernel_map(fr, n_pt, m_pt, i).matrix;
      if (Kr.rows() != Kr.cols() || det(Kr) == 0) all_regular = false;
    }
    if (kernel_transversality(fr, m_pt, n_pt) != all_regular)
      fail(rep, "kernel transversality disagrees with determinant census");
    if (all_regular) {
      GroupElement g = rng.word(fr);
      int i = rng.pick(1, fr.k());
      if (!kernel_equivariance_check(fr, g, m_pt, n_pt, i))
        fail(rep, "kernel equivariance fails");
    }
  }
  return rep;
}

PropertyReport suite_stabilizer(const GradedFrame& fr, Rng& rng, int trials) {
  PropertyReport rep;
  rep.name = "stabilizer_representation";
  rep.trials = trials;
  Matrix zero(fr.dim(), 1);
  Filtration nm = minus_filtration(fr.grading());
  auto parabolic_part = [&](const GroupElement& g) -> std::optional<GroupElement> {
    ChartResult v = act_in_chart(fr, g, zero);
    if (!v.value) return std::nullopt;
    return compose(inverse(exp_ad(fr, *v.value, 1)), g);
  };
  for (int t = 0; t < trials; ++t) {
    auto p = parabolic_part(rng.word(fr));
    auto q = parabolic_part(rng.word(fr));
    if (!p || !q) continue;
    ++rep.checked;
    if (apply(p->matrix, nm) != nm) {
      fail(rep, "parabolic part does not stabilize the base point");
      continue;
    }
    GroupElement pq = compose(*p, *q);
    for (int i = 1; i <= fr.k(); ++i) {
      if (tangent_rep(fr, pq, i, 1) != tangent_rep(fr, *p, i, 1) * tangent_rep(fr, *q, i, 1))
        fail(rep, "plus tangent representation is not multiplicative");
      if (tangent_rep(fr, pq, i, -1) !=
          tangent_rep(fr, *p, i, -1) * tangent_rep(fr, *q, i, -1))
        fail(rep, "minus tangent representation is not multiplicative");
    }
  }
  return rep;
}

// Block-matrix model for two-block gl: words map to 2x2 block matrices and
// the chart action must match X -> (AX + B)(CX + D)^{-1}.
PropertyReport suite_homography(const CatalogEntry& entry, const GradedFrame& fr,
                                Rng& rng, int trials) {
  PropertyReport rep;
  rep.name = "homography_model";
  rep.trials = trials;
  std::vector<int> sizes;
  if (entry.name.rfind("gl", 0) == 0) {
    std::istringstream is(entry.name.substr(2));
    std::string tok;
    while (std::getline(is, tok, ',')) sizes.push_back(std::stoi(tok));
  }
  if (sizes.size() != 2) return rep;  // vacuous outside the two-block model
  int p = sizes[0], q = sizes[1], n = p + q;
  auto unit = [&](int a, int b) { return a * n + b; };
  auto to_block = [&](const Matrix& v, bool upper) {
    // upper: coords of g_1 as a p x q matrix; else g_{-1} as q x p
    Matrix m(upper ? p : q, upper ? q : p);
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        m.at(r, c) = upper ? v.at(unit(r, p + c), 0) : v.at(unit(p + r, c), 0);
    return m;
  };
  auto word_matrix = [&](const GroupElement& g) {
    Matrix M = Matrix::identity(n);
    for (const auto& L : g.word) {
      Matrix u = Matrix::identity(n);
      Matrix blk = to_block(L.v, L.sign == 1);
      for (int r = 0; r < blk.rows(); ++r)
        for (int c = 0; c < blk.cols(); ++c) {
          if (L.sign == 1)
            u.at(r, p + c) = blk.at(r, c);
          else
            u.at(p + r, c) = blk.at(r, c);
        }
      M = M * u;
    }
    return M;
  };
  for (int t = 0; t < trials; ++t) {
    GroupElement g = rng.word(fr);
    Matrix x = rng.plus_vector(fr);
    ChartResult gx = act_in_chart(fr, g, x);
    if (!gx.value) continue;
    ++rep.checked;
    Matrix M = word_matrix(g);
    Matrix X = to_block(x, true);
    Matrix A(p, p), B(p, q), C(q, p), D(q, q);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        if (r < p && c < p) A.at(r, c) = M.at(r, c);
        if (r < p && c >= p) B.at(r, c - p) = M.at(r, c);
        if (r >= p && c < p) C.at(r - p, c) = M.at(r, c);
        if (r >= p && c >= p) D.at(r - p, c - p) = M.at(r, c);
      }
    auto den = invert(C * X + D);
    if (!den) {
      fail(rep, "chart action defined where the homography denominator vanishes");
      continue;
    }
    if (to_block(*gx.value, true) != (A * X + B) * *den)
      fail(rep, "chart action disagrees with the matrix homography");
  }
  return rep;
}

std::vector<PropertyReport> run_all_suites(const CatalogEntry& entry,
                                           const GradedFrame& fr,
                                           unsigned long long seed, int trials) {
  std::vector<PropertyReport> out;
  out.push_back(suite_grading(entry));
  unsigned long long s = seed;
  {
    Rng r(++s);
    out.push_back(suite_transversality(fr, r, trials));
  }
  {
    Rng r(++s);
    out.push_back(suite_torsor(fr, r, trials));
  }
  {
    Rng r(++s);
    out.push_back(suite_chart(fr, r, trials));
  }
  {
    Rng r(++s);
    out.push_back(suite_cocycle(fr, r, trials));
  }
  {
    Rng r(++s);
    out.push_back(suite_transform(fr, r, trials));
  }
  {
    Rng r(++s);
    out.push_back(suite_kernel(fr, r, trials));
  }
  {
    Rng r(++s);
    out.push_back(suite_stabilizer(fr, r, trials));
  }
  {
    Rng r(++s);
    out.push_back(suite_homography(entry, fr, r, trials));
  }
  return out;
}

}  // namespace gfg
