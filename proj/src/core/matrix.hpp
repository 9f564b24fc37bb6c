#pragma once

#include <vector>

#include "core/rational.hpp"

namespace dominor {

// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[i * cols_ + j]; }

  // Submatrix picked by explicit row/column index tuples (0-based).
  Matrix pick(const std::vector<int>& rows, const std::vector<int>& cols) const;

  // Removes one row / one column (0-based).
  Matrix drop(int row, int col) const;

  static Matrix identity(int n);
  // Entries sampled uniformly: numerator in [-mag, mag], denominator in [1, den].
  static Matrix random(int n, Rng& rng, long mag = 99, long den = 9);

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

// Exact determinant via fraction-free Bareiss elimination on the
// denominator-cleared integer matrix. det of the 0x0 matrix is 1.
// Throws NonSquare.
Rational det(const Matrix& m);

Matrix operator*(const Matrix& a, const Matrix& b);

}  // namespace dominor
