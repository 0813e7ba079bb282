#ifndef GFG_CATALOG_HPP
#define GFG_CATALOG_HPP

#include "gfg/grading.hpp"

namespace gfg {

struct CatalogEntry {
  std::string name;
  std::string notes;
  LieAlgebra algebra;
  Grading grading;
};

// sl(2): basis e, h, f; 3-graded by ad(h/2).
CatalogEntry catalog_sl2();

// gl(n) with n = sum of the block sizes, graded by the block weights
// (descending, one per block): deg E_ab = w(block of a) - w(block of b).
// Euler element sum_a w(a) E_aa. Total size capped at 6.
CatalogEntry catalog_gl_blocks(const std::vector<int>& sizes);

// Names: "sl2" or "glS1,S2,..." e.g. "gl2,1,1". Throws std::invalid_argument
// on anything else.
CatalogEntry catalog_lookup(const std::string& name);

// The names shipped by default.
std::vector<std::string> catalog_names();

}  // namespace gfg

#endif
