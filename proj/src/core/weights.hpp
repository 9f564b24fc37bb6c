#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "core/laurent.hpp"
#include "core/matrix.hpp"

namespace dominor {

// Assignment of an exact rational v_{x,y} to each lattice point.
//
// Matrix mode realizes v_{x,y} = CM_{x,y}(M) for 0 <= y <= n (x reduced
// modulo 2n) and v = 1 elsewhere. Table mode is an explicit map with default
// 1. Symbolic mode treats every point as its own variable (see the symbolic
// tiling-polynomial entry points).
class WeightMap {
 public:
  enum class Mode { kOnes, kTable, kMatrix, kSymbolic };

  static WeightMap ones();
  static WeightMap table(std::map<Point, Rational> values, Rational dflt = Rational(1));
  static WeightMap matrix(Matrix m);
  static WeightMap symbolic();

  Mode mode() const { return mode_; }
  bool is_symbolic() const { return mode_ == Mode::kSymbolic; }

  // Exact value of v at the point; not available in symbolic mode.
  Rational value(Point p) const;

  // Matrix-mode size n (0 otherwise).
  int n() const;
  const Matrix& source_matrix() const;

  // Translates the table by (dx, dy); identity for ones mode. Used by the
  // translation-covariance property; not defined for matrix mode.
  WeightMap translated(int dx, int dy) const;

 private:
  WeightMap() = default;

  Mode mode_ = Mode::kOnes;
  std::map<Point, Rational> table_;
  Rational default_ = Rational(1);
  std::shared_ptr<Matrix> matrix_;
  // Central-minor memo; guarded so a shared map stays safe across threads.
  mutable std::map<Point, Rational> memo_;
  mutable std::shared_ptr<std::mutex> memo_mutex_;
};

}  // namespace dominor
