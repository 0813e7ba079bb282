#ifndef GFG_SUBSPACE_HPP
#define GFG_SUBSPACE_HPP

#include <vector>

#include "gfg/matrix.hpp"

namespace gfg {

// Linear subspace of Q^n stored in reduced column-echelon form, the unique
// canonical representative: equal spans compare equal entrywise.
class Subspace {
 public:
  Subspace() = default;

  static Subspace from_columns(int ambient_dim, const Matrix& cols);
  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const Matrix& v) const;
  bool contains(const Subspace& s) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  int ambient_ = 0;
  Matrix basis_;  // ambient_ x dim, canonical
};

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
bool is_direct_sum(const std::vector<Subspace>& parts, int ambient_dim);

Subspace kernel(const Matrix& m);
Subspace image(const Matrix& m);

// Image of s under the linear map g.
Subspace apply(const Matrix& g, const Subspace& s);

}  // namespace gfg

#endif
