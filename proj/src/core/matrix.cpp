#include "core/matrix.hpp"

#include <cstddef>

#include "core/error.hpp"

namespace dominor {

Matrix Matrix::pick(const std::vector<int>& rows, const std::vector<int>& cols) const {
  Matrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
  return out;
}

Matrix Matrix::drop(int row, int col) const {
  std::vector<int> rs, cs;
  for (int i = 0; i < rows_; ++i)
    if (i != row) rs.push_back(i);
  for (int j = 0; j < cols_; ++j)
    if (j != col) cs.push_back(j);
  return pick(rs, cs);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::random(int n, Rng& rng, long mag, long den) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rat(rng.range(-mag, mag), rng.range(1, den));
  return m;
}

Rational det(const Matrix& m) {
  if (!m.square()) fail(Errc::kNonSquare, "det requires a square matrix");
  const int n = m.rows();
  if (n == 0) return Rational(1);

  // Clear denominators row by row; track the scaling factor.
  std::vector<Int> a(n * n);
  Int scale = 1;
  for (int i = 0; i < n; ++i) {
    Int l = 1;
    for (int j = 0; j < n; ++j) {
      Int d = m.at(i, j).get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (int j = 0; j < n; ++j) {
      Rational e = m.at(i, j) * Rational(l);
      a[i * n + j] = e.get_num();  // exact: l is a multiple of the denominator
    }
    scale *= l;
  }

  // Bareiss elimination with column pivoting by row swap.
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i * n + k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return Rational(0);
      for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = t;
      }
      a[i * n + k] = 0;
    }
    prev = a[k * n + k];
  }

  Rational r(sign > 0 ? a[n * n - 1] : Int(-a[n * n - 1]), scale);
  r.canonicalize();
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail(Errc::kBadShape, "matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

}  // namespace dominor
