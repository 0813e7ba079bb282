#include "gfg.h"

#include <cstring>
#include <json.hpp>

#include "gfg/io.hpp"
#include "gfg/properties.hpp"

using nlohmann::json;
using namespace gfg;

struct gfg_algebra {
  CatalogEntry entry;
  std::unique_ptr<GradedFrame> frame;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** slot, const json& j) {
  if (slot) *slot = dup_string(j.dump(2) + "\n");
}

gfg_status emit_error(char** slot, const std::string& msg) {
  emit(slot, json{{"error", msg}});
  return GFG_ERR;
}

json vec_json(const Matrix& col) {
  json a = json::array();
  for (int i = 0; i < col.rows(); ++i) a.push_back(rat_str(col.at(i, 0)));
  return a;
}

json mat_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rat_str(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

gfg_algebra* wrap(CatalogEntry entry) {
  auto* a = new gfg_algebra{std::move(entry), nullptr};
  a->frame = std::make_unique<GradedFrame>(a->entry.algebra, a->entry.grading);
  return a;
}

template <typename F>
gfg_status guarded(char** slot, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return emit_error(slot, e.what());
  }
}

}  // namespace

extern "C" {

const char* gfg_version(void) { return "1.0.0"; }

gfg_status gfg_algebra_load(const char* json_text, gfg_algebra** out, char** message) {
  if (out) *out = nullptr;
  if (!json_text || !out) return emit_error(message, "null argument");
  return guarded(message, [&]() -> gfg_status {
    try {
      *out = wrap(algebra_from_json(json_text));
    } catch (const std::invalid_argument& e) {
      emit(message, json{{"ok", false}, {"reason", e.what()}});
      return GFG_FAIL;
    }
    emit(message, json{{"ok", true}});
    return GFG_OK;
  });
}

gfg_status gfg_algebra_catalog(const char* name, gfg_algebra** out, char** message) {
  if (out) *out = nullptr;
  if (!name || !out) return emit_error(message, "null argument");
  return guarded(message, [&]() -> gfg_status {
    *out = wrap(catalog_lookup(name));
    emit(message, json{{"ok", true}});
    return GFG_OK;
  });
}

void gfg_algebra_free(gfg_algebra* a) { delete a; }

gfg_status gfg_algebra_save(const gfg_algebra* a, char** json_out) {
  if (!a || !json_out) return emit_error(json_out, "null argument");
  return guarded(json_out, [&]() -> gfg_status {
    if (json_out) *json_out = dup_string(algebra_to_json(a->entry));
    return GFG_OK;
  });
}

gfg_status gfg_catalog_names(char** json_out) {
  if (!json_out) return GFG_ERR;
  return guarded(json_out, [&]() -> gfg_status {
    emit(json_out, json(catalog_names()));
    return GFG_OK;
  });
}

gfg_status gfg_validate(const gfg_algebra* a, char** report_out) {
  if (!a) return emit_error(report_out, "null algebra");
  return guarded(report_out, [&]() -> gfg_status {
    Report rep = validate_grading(a->entry.algebra, a->entry.grading);
    std::vector<std::string> all = a->entry.algebra.check_jacobi().violations;
    all.insert(all.end(), rep.violations.begin(), rep.violations.end());
    emit(report_out, json{{"ok", all.empty()}, {"violations", all}});
    return all.empty() ? GFG_OK : GFG_FAIL;
  });
}

gfg_status gfg_act(const gfg_algebra* a, const char* word, const char* x,
                   char** result_out) {
  if (!a || !word || !x) return emit_error(result_out, "null argument");
  return guarded(result_out, [&]() -> gfg_status {
    const GradedFrame& fr = *a->frame;
    GroupElement g = word_to_element(fr, parse_word(word, fr.dim()));
    Matrix xv = parse_vector(x, fr.dim());
    ChartResult r = act_in_chart(fr, g, xv);
    if (!r.value) {
      emit(result_out, json{{"defined", false},
                            {"failed_layer", r.failed_layer},
                            {"failed_operator",
                             r.failed_side == 'd' ? "denominator" : "codenominator"}});
      return GFG_FAIL;
    }
    emit(result_out, json{{"defined", true},
                          {"value", vec_json(*r.value)},
                          {"chart_coordinates", vec_json(fr.plus_proj(1) * *r.value)}});
    return GFG_OK;
  });
}

gfg_status gfg_bergman(const gfg_algebra* a, const char* x, const char* w,
                       int layer, char** result_out) {
  if (!a || !x || !w) return emit_error(result_out, "null argument");
  return guarded(result_out, [&]() -> gfg_status {
    const GradedFrame& fr = *a->frame;
    Matrix xv = parse_vector(x, fr.dim());
    Matrix wv = parse_vector(w, fr.dim());
    Matrix b = bergman(fr, xv, wv, layer, 1);
    Matrix bm = bergman(fr, xv, wv, layer, -1);
    emit(result_out, json{{"layer", layer},
                          {"plus", mat_json(b)},
                          {"plus_det", rat_str(det(b))},
                          {"minus", mat_json(bm)},
                          {"minus_det", rat_str(det(bm))}});
    return GFG_OK;
  });
}

gfg_status gfg_torsor(const gfg_algebra* a, const char* word, char** result_out) {
  if (!a || !word) return emit_error(result_out, "null argument");
  return guarded(result_out, [&]() -> gfg_status {
    const GradedFrame& fr = *a->frame;
    const LieAlgebra& L = fr.algebra();
    GroupElement g = word_to_element(fr, parse_word(word, fr.dim()));
    Filtration target = apply(g.matrix, minus_filtration(fr.grading()));
    if (!is_transversal(target, plus_filtration(fr.grading()))) {
      emit(result_out, json{{"transversal", false}});
      return GFG_FAIL;
    }
    Matrix X = torsor_solve(L, fr.grading(), target);
    Element v = chart_coordinates(L, fr.grading(), target);
    emit(result_out, json{{"transversal", true},
                          {"derivation", mat_json(X)},
                          {"chart_point", vec_json(v.coords)}});
    return GFG_OK;
  });
}

gfg_status gfg_kernel(const gfg_algebra* a, const char* x, const char* w,
                      int layer, char** result_out) {
  if (!a || !x || !w) return emit_error(result_out, "null argument");
  return guarded(result_out, [&]() -> gfg_status {
    const GradedFrame& fr = *a->frame;
    Matrix xv = parse_vector(x, fr.dim());
    Matrix wv = parse_vector(w, fr.dim());
    GeometryPoint n_pt = make_point(fr, 1, exp_ad(fr, xv, 1));
    GeometryPoint m_pt = make_point(fr, -1, exp_ad(fr, wv, -1));
    Matrix K = canonical_kernel(fr, m_pt, n_pt, layer).matrix;
    bool inv = K.rows() == K.cols() && det(K) != 0;
    emit(result_out, json{{"layer", layer},
                          {"matrix", mat_json(K)},
                          {"invertible", inv},
                          {"transversal_pair", kernel_transversality(fr, m_pt, n_pt)}});
    return GFG_OK;
  });
}

gfg_status gfg_realize(const gfg_algebra* a, const char* y, int layer,
                       char** result_out) {
  if (!a || !y) return emit_error(result_out, "null argument");
  return guarded(result_out, [&]() -> gfg_status {
    const GradedFrame& fr = *a->frame;
    Matrix yv = parse_vector(y, fr.dim());
    PolyMap m = realize(fr, yv, layer);
    std::vector<std::string> names = chart_var_names(fr);
    json comps = json::array();
    for (const Poly& p : m.comps) comps.push_back(poly_str(p, names));
    emit(result_out, json{{"layer", layer}, {"variables", names},
                          {"components", comps}});
    return GFG_OK;
  });
}

gfg_status gfg_properties(const gfg_algebra* a, unsigned long long seed,
                          int trials, char** report_out) {
  if (!a) return emit_error(report_out, "null algebra");
  if (trials < 1) return emit_error(report_out, "trials must be positive");
  return guarded(report_out, [&]() -> gfg_status {
    auto reports = run_all_suites(a->entry, *a->frame, seed, trials);
    json arr = json::array();
    bool ok = true;
    for (const auto& r : reports) {
      ok = ok && r.ok();
      arr.push_back(json{{"suite", r.name},
                         {"trials", r.trials},
                         {"checked", r.checked},
                         {"failures", r.failures},
                         {"messages", r.messages}});
    }
    emit(report_out, json{{"ok", ok}, {"seed", seed}, {"trials", trials},
                          {"suites", arr}});
    return ok ? GFG_OK : GFG_FAIL;
  });
}

void gfg_string_free(char* s) { std::free(s); }

}  // extern "C"
