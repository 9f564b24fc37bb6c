#include "core/laurent.hpp"

#include <string>

#include "core/error.hpp"

namespace dominor {

LaurentPoly LaurentPoly::constant(const Rational& c) {
  LaurentPoly p;
  p.add_term({}, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const ExpVec& e, const Rational& c) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(Point pt, int exponent) {
  ExpVec e;
  if (exponent != 0) e[pt] = exponent;
  return monomial(e);
}

void LaurentPoly::add_term(const ExpVec& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      ExpVec e = e1;
      for (const auto& [pt, ex] : e2) {
        int v = (e[pt] += ex);
        if (v == 0) e.erase(pt);
      }
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

Rational LaurentPoly::eval(const std::function<Rational(Point)>& assign) const {
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (const auto& [pt, ex] : e) {
      Rational v = assign(pt);
      if (v == 0 && ex < 0) {
        fail(Errc::kDivisionByZero, "variable v_{" + std::to_string(pt.first) + "," +
                                        std::to_string(pt.second) +
                                        "} is zero but occurs with negative exponent");
      }
      Rational pw(1);
      Rational base = ex > 0 ? v : Rational(1) / v;
      for (int i = 0; i < (ex > 0 ? ex : -ex); ++i) pw *= base;
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

}  // namespace dominor
