#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace dominor {

// Exact arithmetic substrate. Rationals are always canonical: lowest terms,
// positive denominator, zero is 0/1 (gmp guarantees this after canonicalize).
using Int = mpz_class;
using Rational = mpq_class;

// Lattice point (x, y); also indexes the v_{x,y} variables.
using Point = std::pair<int, int>;

// Parses "p/q" or "p" (optional sign, arbitrary precision). Throws ParseError.
Rational rational_from_string(const std::string& s);

// Formats as "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Deterministic, platform-independent RNG (splitmix64).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rng fork() { return Rng(next() ^ 0xd1b54a32d192ed03ULL); }

 private:
  std::uint64_t state_;
};

}  // namespace dominor
