#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "core/matrix.hpp"
#include "core/signed_offset.hpp"

namespace dominor {

// Matrix indices live in 1..n, arranged counter-clockwise around a circle;
// additions reduce modulo n into that range.
inline int wrap_index(long i, int n) {
  long r = (i - 1) % n;
  if (r < 0) r += n;
  return static_cast<int>(r + 1);
}

// Circular pair (A, B): a_1..a_k and b_l..b_1 jointly in counter-clockwise
// order around the circle.
struct CircularPair {
  std::vector<int> a;  // a_1..a_k
  std::vector<int> b;  // b_1..b_l
  int n = 0;
};

bool circular_pair_valid(const CircularPair& p);

// det of the submatrix (m_{a_i, b_j}); throws BadPair when the ordering
// invariant fails or |A| != |B|.
Rational circular_minor(const Matrix& m, const CircularPair& p);

// CON_{a,b,y}: rows {a,...,a+y-1}, columns (b+y-1,...,b), indices mod n.
Rational contiguous_minor(const Matrix& m, int a, int b, int y);

// CM_{x,y}: the contiguous minor at a = floor((x-y)/2),
// b = floor((x-y+n-((n-1) mod 2))/2); x is interpreted modulo 2n.
Rational central_minor(const Matrix& m, long x, int y);

// Index pair (a, b) used by CM_{x,y} for an n x n matrix, already wrapped.
std::pair<int, int> central_minor_indices(long x, int y, int n);

// All small central minors: 1 <= x <= n and (1 <= y < n/2, or y = n/2 with
// x+y odd). There are C(n,2) of them.
std::vector<std::pair<Point, Rational>> small_central_minors(const Matrix& m);

// Result of locating the central position for CON_{a,b,y}: the h closest to 0
// with CON_{a,b+h,y} central (ties broken toward positive h), the central x,
// and the 0+/0- flavor when h = 0. When two candidates share |h| the
// runner-up is reported too.
struct CentralOffset {
  int x = 0;
  SignedOffset h;
  std::optional<std::pair<int, SignedOffset>> tied_alternative;
};

CentralOffset central_offset(int a, int b, int y, int n);

// Semicontiguous minor spec. side SM: A = {a..a+k-1} contiguous, B split into
// blocks of sizes ks separated by gaps ts, first index b, counter-clockwise.
// side SMbar: B = {b..b+k-1} contiguous, A split clockwise into blocks ks
// with gaps ts; the index arc of A starts at a.
struct SemiContigSpec {
  int a = 1, b = 1;
  std::vector<int> ks;
  std::vector<int> ts;
  int n = 0;
  enum class Side { kSM, kSMbar } side = Side::kSM;

  int k() const;
  int t() const;
  int s() const { return static_cast<int>(ks.size()); }
};

// Applies the three degenerate identifications (k_s = 0, k_1 = 0, t_i = 0)
// until all entries are positive. Value-preserving. Throws UnnormalizableSpec
// on negative entries.
SemiContigSpec normalize_sm_spec(const SemiContigSpec& spec);

Rational sm_minor(const Matrix& m, const SemiContigSpec& spec);

// Row index of A_1 and column index of B_1 for the block driving the
// Theorem 1 correspondence (SM: last k_1 rows of A with the first block of B;
// SMbar: the mirror convention).
std::pair<int, int> sm_anchor_block(const SemiContigSpec& spec);

// Exact evaluation of both sides of an identity.
struct IdentityCheck {
  bool equal = false;
  Rational lhs, rhs;
};

// Dodgson condensation: rows a,b and columns c,d removed from a square
// matrix; requires the cyclic order (a, b, d, c), i.e. a<b iff c<d.
IdentityCheck dodgson_check(const Matrix& m, int a, int b, int c, int d);

// Jaw move on an n x (n+1) matrix: columns d,e,f and row g; requires the
// cyclic order (g, f, e, d) on the circular diagram, i.e. column positions
// d < e < f (or all reversed).
IdentityCheck jaw_move_check(const Matrix& m, int d, int e, int f, int g);

// Verifies the six-term semicontiguous-minor recurrence obtained from the jaw
// move; spec must have s >= 2 and side SM.
IdentityCheck recurrence_check(const Matrix& m, const SemiContigSpec& spec);

}  // namespace dominor
