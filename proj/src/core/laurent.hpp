#pragma once

#include <functional>
#include <map>
#include <utility>

#include "core/rational.hpp"

namespace dominor {

// Sparse exponent vector: point -> signed exponent, no zero entries stored.
using ExpVec = std::map<Point, int>;

// Multivariate Laurent polynomial in variables v_{x,y}, rational coefficients.
// No zero coefficients stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const Rational& c);
  static LaurentPoly monomial(const ExpVec& e, const Rational& c = Rational(1));
  static LaurentPoly variable(Point p, int exponent = 1);

  const std::map<ExpVec, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const ExpVec& e, const Rational& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  // Exact evaluation under a point->value assignment. A variable with a
  // negative exponent must evaluate to a nonzero rational (DivisionByZero).
  Rational eval(const std::function<Rational(Point)>& assign) const;

 private:
  std::map<ExpVec, Rational> terms_;
};

}  // namespace dominor
