#include "core/rational.hpp"

#include "core/error.hpp"

namespace dominor {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) fail(Errc::kParseError, "empty rational literal");
  mpq_t q;
  mpq_init(q);
  if (mpq_set_str(q, s.c_str(), 10) != 0) {
    mpq_clear(q);
    fail(Errc::kParseError, "bad rational literal: " + s);
  }
  if (mpz_sgn(mpq_denref(q)) == 0) {
    mpq_clear(q);
    fail(Errc::kDivisionByZero, "zero denominator in rational literal: " + s);
  }
  mpq_canonicalize(q);
  Rational r(q);
  mpq_clear(q);
  return r;
}

std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace dominor
