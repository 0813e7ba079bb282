#ifndef GFG_MATRIX_HPP
#define GFG_MATRIX_HPP

#include <optional>
#include <vector>

#include "gfg/rational.hpp"

namespace gfg {

// Dense matrix of exact rationals. Immutable use is the norm; the few
// mutators exist for construction only.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rat& s) const;

  Matrix transposed() const;
  bool is_zero() const;
  Rat trace() const;

  Matrix col(int c) const;
  void set_col(int c, const Matrix& v);

  static Matrix hcat(const Matrix& a, const Matrix& b);
  static Matrix vcat(const Matrix& a, const Matrix& b);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

inline Matrix operator*(const Rat& s, const Matrix& m) { return m * s; }

struct RrefResult {
  Matrix mat;
  std::vector<int> pivots;  // pivot column per pivot row
  int rank = 0;
};

// Reduced row-echelon form, first-nonzero pivoting.
RrefResult rref_full(const Matrix& m);
Matrix rref(const Matrix& m);

// Solves aX = b; free variables set to 0; nullopt when inconsistent.
// Throws std::invalid_argument on row-count mismatch.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Inverse; nullopt iff singular. Throws on non-square input.
std::optional<Matrix> invert(const Matrix& m);

// Columns spanning ker(m) (not canonicalized; see Subspace for that).
Matrix kernel_basis(const Matrix& m);

// Determinant via fraction-free Bareiss elimination on the
// denominator-cleared integer matrix. Throws on non-square input.
Rat det(const Matrix& m);

std::string matrix_str(const Matrix& m);

}  // namespace gfg

#endif
