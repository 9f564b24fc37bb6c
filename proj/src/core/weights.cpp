#include "core/weights.hpp"

#include "core/error.hpp"
#include "core/minors.hpp"

namespace dominor {

WeightMap WeightMap::ones() { return WeightMap(); }

WeightMap WeightMap::table(std::map<Point, Rational> values, Rational dflt) {
  WeightMap w;
  w.mode_ = Mode::kTable;
  w.table_ = std::move(values);
  w.default_ = std::move(dflt);
  return w;
}

WeightMap WeightMap::matrix(Matrix m) {
  if (!m.square()) fail(Errc::kNonSquare, "weight map needs a square matrix");
  WeightMap w;
  w.mode_ = Mode::kMatrix;
  w.matrix_ = std::make_shared<Matrix>(std::move(m));
  w.memo_mutex_ = std::make_shared<std::mutex>();
  return w;
}

WeightMap WeightMap::symbolic() {
  WeightMap w;
  w.mode_ = Mode::kSymbolic;
  return w;
}

int WeightMap::n() const { return matrix_ ? matrix_->rows() : 0; }

const Matrix& WeightMap::source_matrix() const {
  if (!matrix_) fail(Errc::kInternal, "weight map has no source matrix");
  return *matrix_;
}

Rational WeightMap::value(Point p) const {
  switch (mode_) {
    case Mode::kOnes:
      return Rational(1);
    case Mode::kTable: {
      auto it = table_.find(p);
      return it == table_.end() ? default_ : it->second;
    }
    case Mode::kMatrix: {
      const int nn = matrix_->rows();
      if (p.second < 0 || p.second > nn) return Rational(1);
      long x = p.first % (2L * nn);
      if (x <= 0) x += 2L * nn;
      Point key{static_cast<int>(x), p.second};
      std::lock_guard<std::mutex> lock(*memo_mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
      Rational v = central_minor(*matrix_, key.first, key.second);
      memo_.emplace(key, v);
      return v;
    }
    case Mode::kSymbolic:
      fail(Errc::kInvalidParams, "symbolic weight map has no numeric values");
  }
  return Rational(1);
}

WeightMap WeightMap::translated(int dx, int dy) const {
  if (mode_ == Mode::kOnes) return *this;
  if (mode_ != Mode::kTable)
    fail(Errc::kInvalidParams, "translation is only defined for table weight maps");
  std::map<Point, Rational> moved;
  for (const auto& [p, v] : table_) moved[{p.first + dx, p.second + dy}] = v;
  return table(std::move(moved), default_);
}

}  // namespace dominor
