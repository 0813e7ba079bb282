#include "gfg/io.hpp"

#include <cctype>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace gfg {

using nlohmann::json;

static json vec_json(const Matrix& col) {
  json a = json::array();
  for (int i = 0; i < col.rows(); ++i) a.push_back(rat_str(col.at(i, 0)));
  return a;
}

static Matrix vec_from_json(const json& a, int dim, const char* what) {
  if (!a.is_array() || int(a.size()) != dim)
    throw std::invalid_argument(std::string(what) + ": expected array of length " +
                                std::to_string(dim));
  Matrix m(dim, 1);
  for (int i = 0; i < dim; ++i) {
    if (!a[size_t(i)].is_string())
      throw std::invalid_argument(std::string(what) + ": entries must be strings");
    m.at(i, 0) = rat_parse(a[size_t(i)].get<std::string>());
  }
  return m;
}

std::string algebra_to_json(const CatalogEntry& entry) {
  const LieAlgebra& L = entry.algebra;
  int d = L.dim();
  json j;
  j["name"] = entry.name;
  j["notes"] = entry.notes;
  j["dim"] = d;
  j["labels"] = L.labels();
  json st = json::array();
  for (int i = 0; i < d; ++i)
    for (int k = i + 1; k < d; ++k) {
      const Matrix& c = L.structure(i, k);
      if (c.is_zero()) continue;
      st.push_back(json::array({i, k, vec_json(c)}));
    }
  j["structure"] = st;
  json gr;
  gr["k"] = entry.grading.k;
  json layers = json::array();
  for (int n = -entry.grading.k; n <= entry.grading.k; ++n) {
    const Matrix& b = entry.grading.layer(n).basis();
    json cols = json::array();
    for (int c = 0; c < b.cols(); ++c) cols.push_back(vec_json(b.col(c)));
    layers.push_back(cols);
  }
  gr["layers"] = layers;
  j["grading"] = gr;
  if (entry.grading.euler) j["euler"] = vec_json(*entry.grading.euler);
  return j.dump(2) + "\n";
}

static CatalogEntry parse_entry(const std::string& text, Report* rep) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    throw std::invalid_argument("missing integer field 'dim'");
  int d = j["dim"].get<int>();
  if (d < 1) throw std::invalid_argument("'dim' must be positive");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || int(j["labels"].size()) != d)
      throw std::invalid_argument("'labels' must be an array of length dim");
    for (const auto& x : j["labels"]) labels.push_back(x.get<std::string>());
  } else {
    for (int i = 0; i < d; ++i) labels.push_back("b" + std::to_string(i + 1));
  }
  std::vector<std::vector<Matrix>> c(size_t(d), std::vector<Matrix>(size_t(d), Matrix(d, 1)));
  if (!j.contains("structure") || !j["structure"].is_array())
    throw std::invalid_argument("missing array field 'structure'");
  for (const auto& t : j["structure"]) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
        !t[1].is_number_integer())
      throw std::invalid_argument("'structure' entries must be [i, j, coeffs]");
    int a = t[0].get<int>(), b = t[1].get<int>();
    if (a < 0 || a >= d || b < 0 || b >= d || a == b)
      throw std::invalid_argument("'structure' index out of range");
    Matrix col = vec_from_json(t[2], d, "structure coefficients");
    c[size_t(a)][size_t(b)] = col;
    c[size_t(b)][size_t(a)] = -col;
  }
  LieAlgebra L(std::move(labels), std::move(c));
  if (!L.jacobi_ok()) {
    if (rep)
      rep->violations.insert(rep->violations.end(), L.check_jacobi().violations.begin(),
                             L.check_jacobi().violations.end());
    else
      throw std::invalid_argument("Jacobi identity fails: " +
                                  L.check_jacobi().violations.front());
  }
  if (!j.contains("grading") || !j["grading"].is_object())
    throw std::invalid_argument("missing object field 'grading'");
  const json& gr = j["grading"];
  if (!gr.contains("k") || !gr["k"].is_number_integer())
    throw std::invalid_argument("grading needs integer 'k'");
  int k = gr["k"].get<int>();
  if (k < 0) throw std::invalid_argument("grading 'k' must be nonnegative");
  if (!gr.contains("layers") || !gr["layers"].is_array() ||
      int(gr["layers"].size()) != 2 * k + 1)
    throw std::invalid_argument("grading needs 2k+1 'layers'");
  std::vector<Subspace> layers;
  for (const auto& ly : gr["layers"]) {
    if (!ly.is_array()) throw std::invalid_argument("each layer must be a column array");
    Matrix cols(d, int(ly.size()));
    for (size_t cidx = 0; cidx < ly.size(); ++cidx)
      cols.set_col(int(cidx), vec_from_json(ly[cidx], d, "layer column"));
    layers.push_back(Subspace::from_columns(d, cols));
  }
  std::optional<Matrix> euler;
  if (j.contains("euler")) euler = vec_from_json(j["euler"], d, "euler");
  Grading G = grading_from_layers(L, std::move(layers), k, euler);
  Report v = validate_grading(L, G);
  if (!v.ok()) {
    if (rep)
      rep->violations.insert(rep->violations.end(), v.violations.begin(),
                             v.violations.end());
    else
      throw std::invalid_argument("grading axioms fail: " + v.violations.front());
  }
  std::string name = j.value("name", std::string("unnamed"));
  std::string notes = j.value("notes", std::string());
  return CatalogEntry{name, notes, std::move(L), std::move(G)};
}

CatalogEntry algebra_from_json(const std::string& text) { return parse_entry(text, nullptr); }

CatalogEntry algebra_from_json_report(const std::string& text, Report& out) {
  return parse_entry(text, &out);
}

Matrix parse_vector(const std::string& text, int dim) {
  std::string s;
  for (char ch : text)
    if (!isspace((unsigned char)ch)) s += ch;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("vector must look like [a,b,...]");
  s = s.substr(1, s.size() - 2);
  std::vector<Rat> vals;
  if (!s.empty()) {
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) vals.push_back(rat_parse(tok));
  }
  if (int(vals.size()) != dim)
    throw std::invalid_argument("vector has " + std::to_string(vals.size()) +
                                " entries, expected " + std::to_string(dim));
  Matrix m(dim, 1);
  for (int i = 0; i < dim; ++i) m.at(i, 0) = vals[size_t(i)];
  return m;
}

std::vector<std::pair<int, Matrix>> parse_word(const std::string& text, int dim) {
  std::vector<std::pair<int, Matrix>> out;
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ';')) {
    size_t p = tok.find_first_not_of(" \t");
    if (p == std::string::npos) throw std::invalid_argument("empty word letter");
    char sgn = tok[p];
    if (sgn != '+' && sgn != '-')
      throw std::invalid_argument("word letters must start with '+' or '-'");
    out.emplace_back(sgn == '+' ? 1 : -1, parse_vector(tok.substr(p + 1), dim));
  }
  if (out.empty()) throw std::invalid_argument("empty word");
  return out;
}

GroupElement word_to_element(const GradedFrame& fr,
                             const std::vector<std::pair<int, Matrix>>& word) {
  GroupElement g = identity_element(fr);
  for (const auto& [sgn, v] : word) g = compose(g, exp_ad(fr, v, sgn));
  return g;
}

}  // namespace gfg
