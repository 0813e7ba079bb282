#include "gfg/catalog.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gfg {

CatalogEntry catalog_sl2() {
  // basis e, h, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h
  int d = 3;
  auto col = [&](std::initializer_list<Rat> v) {
    Matrix m(d, 1);
    int i = 0;
    for (const Rat& x : v) m.at(i++, 0) = x;
    return m;
  };
  std::vector<std::vector<Matrix>> c(3, std::vector<Matrix>(3, Matrix(d, 1)));
  c[0][1] = col({-2, 0, 0});  // [e,h]
  c[1][0] = col({2, 0, 0});
  c[0][2] = col({0, 1, 0});  // [e,f]
  c[2][0] = col({0, -1, 0});
  c[1][2] = col({0, 0, -2});  // [h,f]
  c[2][1] = col({0, 0, 2});
  LieAlgebra L({"e", "h", "f"}, std::move(c));
  Element E = element(L, {0, Rat(1, 2), 0});
  Grading G = grading_from_euler(L, E, 1);
  return CatalogEntry{"sl2", "sl(2), 3-graded by ad(h/2)", std::move(L), std::move(G)};
}

CatalogEntry catalog_gl_blocks(const std::vector<int>& sizes) {
  if (sizes.size() < 2) throw std::invalid_argument("gl catalog: need at least 2 blocks");
  int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("gl catalog: block sizes must be positive");
  if (n > 6) throw std::invalid_argument("gl catalog: total size capped at 6");
  int d = n * n;
  // weight of each row/column index: descending, one value per block
  std::vector<int> w(static_cast<size_t>(n));
  int idx = 0;
  for (size_t t = 0; t < sizes.size(); ++t)
    for (int r = 0; r < sizes[t]; ++r) w[size_t(idx++)] = int(sizes.size()) - 1 - int(t);
  auto unit = [&](int a, int b) { return a * n + b; };  // index of E_{a+1,b+1}
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::ostringstream os;
      os << "E" << a + 1 << b + 1;
      labels.push_back(os.str());
    }
  // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
  std::vector<std::vector<Matrix>> c(size_t(d), std::vector<Matrix>(size_t(d), Matrix(d, 1)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f) {
          Matrix& col = c[size_t(unit(a, b))][size_t(unit(e, f))];
          if (b == e) col.at(unit(a, f), 0) += 1;
          if (f == a) col.at(unit(e, b), 0) -= 1;
        }
  LieAlgebra L(std::move(labels), std::move(c));
  Matrix E(d, 1);
  for (int a = 0; a < n; ++a) E.at(unit(a, a), 0) = w[size_t(a)];
  int k = int(sizes.size()) - 1;
  Grading G = grading_from_euler(L, Element(L, E), k);
  std::ostringstream nm, notes;
  nm << "gl";
  for (size_t t = 0; t < sizes.size(); ++t) nm << (t ? "," : "") << sizes[t];
  notes << "gl(" << n << ") with block weights, " << 2 * k + 1 << "-graded";
  return CatalogEntry{nm.str(), notes.str(), std::move(L), std::move(G)};
}

CatalogEntry catalog_lookup(const std::string& name) {
  if (name == "sl2") return catalog_sl2();
  if (name.rfind("gl", 0) == 0 && name.size() > 2) {
    std::vector<int> sizes;
    std::istringstream is(name.substr(2));
    std::string tok;
    while (std::getline(is, tok, ',')) {
      size_t pos = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("unknown catalog name: " + name);
      }
      if (pos != tok.size()) throw std::invalid_argument("unknown catalog name: " + name);
      sizes.push_back(v);
    }
    if (!sizes.empty()) return catalog_gl_blocks(sizes);
  }
  throw std::invalid_argument("unknown catalog name: " + name);
}

std::vector<std::string> catalog_names() {
  return {"sl2", "gl1,1", "gl2,1", "gl2,2", "gl2,1,1", "gl1,1,1,1", "gl1,1,1,1,1"};
}

}  // namespace gfg
