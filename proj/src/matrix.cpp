#include "gfg/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gfg {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix add: dimension mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix sub: dimension mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix mul: dimension mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& b = o.at(k, j);
        if (b != 0) r.at(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator*(const Rat& s) const {
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

Matrix Matrix::transposed() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (const Rat& x : e_)
    if (x != 0) return false;
  return true;
}

Rat Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: non-square");
  Rat t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Matrix Matrix::col(int c) const {
  Matrix r(rows_, 1);
  for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, c);
  return r;
}

void Matrix::set_col(int c, const Matrix& v) {
  if (v.rows() != rows_ || v.cols() != 1)
    throw std::invalid_argument("set_col: dimension mismatch");
  for (int i = 0; i < rows_; ++i) at(i, c) = v.at(i, 0);
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
  Matrix r(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vcat: col mismatch");
  Matrix r(a.rows() + b.rows(), a.cols());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
  }
  return r;
}

RrefResult rref_full(const Matrix& m) {
  RrefResult res;
  res.mat = m;
  Matrix& a = res.mat;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < a.rows(); ++i)
      if (a.at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    Rat inv = Rat(1) / a.at(row, col);
    for (int j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row) continue;
      Rat f = a.at(i, col);
      if (f == 0) continue;
      for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

Matrix rref(const Matrix& m) { return rref_full(m).mat; }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  RrefResult r = rref_full(Matrix::hcat(a, b));
  // a pivot inside the augmented block means some rhs is inconsistent
  for (int i = 0; i < r.rank; ++i)
    if (r.pivots[i] >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (int i = 0; i < r.rank; ++i)
    for (int j = 0; j < b.cols(); ++j) x.at(r.pivots[i], j) = r.mat.at(i, a.cols() + j);
  return x;
}

std::optional<Matrix> invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("invert: non-square");
  RrefResult r = rref_full(Matrix::hcat(m, Matrix::identity(m.rows())));
  if (r.rank < m.rows()) return std::nullopt;
  for (int i = 0; i < r.rank; ++i)
    if (r.pivots[i] >= m.cols()) return std::nullopt;
  Matrix inv(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) inv.at(i, j) = r.mat.at(i, m.cols() + j);
  return inv;
}

Matrix kernel_basis(const Matrix& m) {
  RrefResult r = rref_full(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix k(m.cols(), int(free_cols.size()));
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    int f = free_cols[fi];
    k.at(f, int(fi)) = 1;
    for (int i = 0; i < r.rank; ++i) k.at(r.pivots[i], int(fi)) = -r.mat.at(i, f);
  }
  return k;
}

Rat det(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square");
  int n = m.rows();
  if (n == 0) return 1;
  // clear denominators row-wise, then fraction-free Bareiss over mpz
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpq_class scale_den = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j) {
      mpz_class d = m.at(i, j).get_den();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
      l = l / g * d;
    }
    for (int j = 0; j < n; ++j) {
      mpq_class v = m.at(i, j) * Rat(l);
      a[i][j] = v.get_num();
    }
    scale_den *= Rat(l);
  }
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a[i][k] != 0) { piv = i; break; }
    if (piv < 0) return 0;
    if (piv != k) { std::swap(a[piv], a[k]); sign = -sign; }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rat d(a[n - 1][n - 1] * sign);
  d /= scale_den;
  return d;
}

std::string matrix_str(const Matrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "[") << rat_str(m.at(i, j));
    os << "]" << (i + 1 == m.rows() ? "]" : "\n");
  }
  return os.str();
}

}  // namespace gfg
