#include "core/minors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "core/error.hpp"

namespace dominor {

namespace {

std::vector<int> contiguous_rows(int a, int y, int n) {
  std::vector<int> rows(y);
  for (int i = 0; i < y; ++i) rows[i] = wrap_index(a + i, n);
  return rows;
}

// Column tuple of a contiguous minor: (b+y-1, ..., b).
std::vector<int> contiguous_cols(int b, int y, int n) {
  std::vector<int> cols(y);
  for (int j = 0; j < y; ++j) cols[j] = wrap_index(b + y - 1 - j, n);
  return cols;
}

Rational minor_det(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<int> r0(rows.size()), c0(cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) r0[i] = rows[i] - 1;
  for (std::size_t j = 0; j < cols.size(); ++j) c0[j] = cols[j] - 1;
  return det(m.pick(r0, c0));
}

}  // namespace

bool circular_pair_valid(const CircularPair& p) {
  if (p.n < 1) return false;
  std::vector<int> seq = p.a;
  for (auto it = p.b.rbegin(); it != p.b.rend(); ++it) seq.push_back(*it);
  if (seq.empty()) return true;
  for (int v : seq)
    if (v < 1 || v > p.n) return false;
  // One full counter-clockwise traversal: forward gaps must sum to < n.
  long total = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    int gap = seq[i + 1] - seq[i];
    gap %= p.n;
    if (gap < 0) gap += p.n;
    if (gap == 0) return false;  // repeated index
    total += gap;
  }
  return total <= p.n - 1;
}

Rational circular_minor(const Matrix& m, const CircularPair& p) {
  if (p.a.size() != p.b.size()) fail(Errc::kBadPair, "circular minor needs |A| = |B|");
  if (m.rows() != p.n || m.cols() != p.n) fail(Errc::kBadPair, "pair size does not match matrix");
  if (!circular_pair_valid(p)) fail(Errc::kBadPair, "indices are not in circular order");
  return minor_det(m, p.a, p.b);
}

Rational contiguous_minor(const Matrix& m, int a, int b, int y) {
  if (!m.square()) fail(Errc::kNonSquare, "contiguous minor of a non-square matrix");
  const int n = m.rows();
  if (y < 0 || y > n) fail(Errc::kInvalidParams, "minor size out of range");
  return minor_det(m, contiguous_rows(a, y, n), contiguous_cols(b, y, n));
}

std::pair<int, int> central_minor_indices(long x, int y, int n) {
  const long r = (n - 1) % 2;
  auto floordiv2 = [](long v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); };
  const long a = floordiv2(x - y);
  const long b = floordiv2(x - y + n - r);
  return {wrap_index(a, n), wrap_index(b, n)};
}

Rational central_minor(const Matrix& m, long x, int y) {
  if (!m.square()) fail(Errc::kNonSquare, "central minor of a non-square matrix");
  const auto [a, b] = central_minor_indices(x, y, m.rows());
  return contiguous_minor(m, a, b, y);
}

std::vector<std::pair<Point, Rational>> small_central_minors(const Matrix& m) {
  const int n = m.rows();
  std::vector<std::pair<Point, Rational>> out;
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; 2 * y <= n; ++y) {
      if (2 * y == n && (x + y) % 2 == 0) continue;
      out.push_back({{x, y}, central_minor(m, x, y)});
    }
  }
  return out;
}

CentralOffset central_offset(int a, int b, int y, int n) {
  if (y < 0 || y > n) fail(Errc::kInvalidParams, "minor size out of range");
  const int d0 = (n - 1) / 2;

  // Candidates per parity branch p: h == d0 + p + a - b (mod n), taken at the
  // representative nearest zero; p fixes the parity of x - y.
  struct Cand {
    int h;
    int p;
  };
  std::vector<Cand> cands;
  for (int p = 0; p <= 1; ++p) {
    int c = static_cast<int>(((long)d0 + p + a - b) % n);
    if (c < 0) c += n;
    cands.push_back({c, p});
    cands.push_back({c - n, p});
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& l, const Cand& r) {
    if (std::abs(l.h) != std::abs(r.h)) return std::abs(l.h) < std::abs(r.h);
    return l.h > r.h;  // tie: prefer the positive representative
  });

  auto pack = [&](const Cand& c) -> std::pair<int, SignedOffset> {
    long x = 2L * a + y + c.p;
    x = ((x - 1) % (2L * n) + 2L * n) % (2L * n) + 1;  // canonical in 1..2n
    SignedOffset h = c.h != 0 ? SignedOffset::of(c.h)
                              : (c.p == 0 ? SignedOffset::zero_plus() : SignedOffset::zero_minus());
    return {static_cast<int>(x), h};
  };

  CentralOffset out;
  auto [x0, h0] = pack(cands[0]);
  out.x = x0;
  out.h = h0;
  if (std::abs(cands[1].h) == std::abs(cands[0].h)) out.tied_alternative = pack(cands[1]);
  return out;
}

int SemiContigSpec::k() const { return std::accumulate(ks.begin(), ks.end(), 0); }
int SemiContigSpec::t() const { return std::accumulate(ts.begin(), ts.end(), 0); }

SemiContigSpec normalize_sm_spec(const SemiContigSpec& spec) {
  SemiContigSpec s = spec;
  if (s.ks.size() != s.ts.size() + 1) fail(Errc::kBadSpec, "need |ks| = |ts| + 1");
  for (;;) {
    for (int v : s.ks)
      if (v < 0) fail(Errc::kUnnormalizableSpec, "negative block size");
    for (int v : s.ts)
      if (v < 0) fail(Errc::kUnnormalizableSpec, "negative gap size");

    // Zero gap: adjacent blocks merge.
    auto tz = std::find(s.ts.begin(), s.ts.end(), 0);
    if (tz != s.ts.end()) {
      std::size_t i = tz - s.ts.begin();
      s.ks[i] += s.ks[i + 1];
      s.ks.erase(s.ks.begin() + i + 1);
      s.ts.erase(s.ts.begin() + i);
      continue;
    }
    if (s.ks.size() >= 2 && s.ks.back() == 0) {
      s.ks.pop_back();
      s.ts.pop_back();
      continue;
    }
    if (s.ks.size() >= 2 && s.ks.front() == 0) {
      s.ks.erase(s.ks.begin());
      s.ts.erase(s.ts.begin());
      continue;
    }
    break;
  }
  return s;
}

namespace {

// Row list for SMbar: the arc starting at a, blocks A_s..A_1 separated by the
// gaps t_{s-1}..t_1 (blocks appear clockwise as A_1..A_s).
std::vector<int> smbar_rows(const SemiContigSpec& sp) {
  std::vector<int> rows;
  long pos = sp.a;
  for (int i = sp.s() - 1; i >= 0; --i) {
    for (int j = 0; j < sp.ks[i]; ++j) rows.push_back(wrap_index(pos + j, sp.n));
    pos += sp.ks[i];
    if (i > 0) pos += sp.ts[i - 1];
  }
  return rows;
}

// Counter-clockwise column list for SM: blocks B_1..B_s from b with gaps.
std::vector<int> sm_cols_ccw(const SemiContigSpec& sp) {
  std::vector<int> cols;
  long pos = sp.b;
  for (int i = 0; i < sp.s(); ++i) {
    for (int j = 0; j < sp.ks[i]; ++j) cols.push_back(wrap_index(pos + j, sp.n));
    pos += sp.ks[i];
    if (i + 1 < sp.s()) pos += sp.ts[i];
  }
  return cols;
}

void validate_spec(const SemiContigSpec& sp) {
  if (sp.n < 1) fail(Errc::kBadSpec, "spec needs n >= 1");
  if (sp.ks.empty() || sp.ks.size() != sp.ts.size() + 1) fail(Errc::kBadSpec, "bad ks/ts shape");
  for (int v : sp.ks)
    if (v < 0) fail(Errc::kBadSpec, "negative block size");
  for (int v : sp.ts)
    if (v < 0) fail(Errc::kBadSpec, "negative gap size");
  if (sp.k() + sp.t() > sp.n) fail(Errc::kBadSpec, "k + t exceeds n");
}

}  // namespace

Rational sm_minor(const Matrix& m, const SemiContigSpec& spec) {
  validate_spec(spec);
  if (m.rows() != spec.n || m.cols() != spec.n) fail(Errc::kBadSpec, "matrix size mismatch");
  SemiContigSpec sp = normalize_sm_spec(spec);
  const int k = sp.k();
  if (k == 0) return Rational(1);

  std::vector<int> rows, cols_ccw;
  if (sp.side == SemiContigSpec::Side::kSM) {
    rows = contiguous_rows(sp.a, k, sp.n);
    cols_ccw = sm_cols_ccw(sp);
  } else {
    rows = smbar_rows(sp);
    for (int j = 0; j < k; ++j) cols_ccw.push_back(wrap_index(sp.b + j, sp.n));
  }
  std::vector<int> cols(cols_ccw.rbegin(), cols_ccw.rend());
  return minor_det(m, rows, cols);
}

std::pair<int, int> sm_anchor_block(const SemiContigSpec& spec) {
  const int k = spec.k(), t = spec.t(), k1 = spec.ks.front();
  if (spec.side == SemiContigSpec::Side::kSM)
    return {wrap_index(spec.a + k - k1, spec.n), wrap_index(spec.b, spec.n)};
  return {wrap_index(spec.a + k + t - k1, spec.n), wrap_index(spec.b + k - k1, spec.n)};
}

IdentityCheck dodgson_check(const Matrix& m, int a, int b, int c, int d) {
  if (!m.square()) fail(Errc::kNonSquare, "Dodgson condensation needs a square matrix");
  const int n = m.rows();
  if (n < 2) fail(Errc::kBadShape, "need n >= 2");
  auto in_range = [&](int v) { return 1 <= v && v <= n; };
  if (!in_range(a) || !in_range(b) || !in_range(c) || !in_range(d) || a == b || c == d)
    fail(Errc::kBadOrder, "row/column removals must be distinct and in range");
  if ((a < b) != (c < d)) fail(Errc::kBadOrder, "indices a,b,d,c are not in cyclic order");
  if (a > b) {
    std::swap(a, b);
    std::swap(c, d);
  }

  auto dropped = [&](std::vector<int> rows, std::vector<int> cols) {
    std::vector<int> rs, cs;
    for (int i = 1; i <= n; ++i)
      if (std::find(rows.begin(), rows.end(), i) == rows.end()) rs.push_back(i);
    for (int j = 1; j <= n; ++j)
      if (std::find(cols.begin(), cols.end(), j) == cols.end()) cs.push_back(j);
    return minor_det(m, rs, cs);
  };

  IdentityCheck out;
  out.lhs = dropped({a}, {c}) * dropped({b}, {d});
  out.rhs = det(m) * dropped({a, b}, {c, d}) + dropped({b}, {c}) * dropped({a}, {d});
  out.equal = out.lhs == out.rhs;
  return out;
}

IdentityCheck jaw_move_check(const Matrix& m, int d, int e, int f, int g) {
  const int n = m.rows();
  if (m.cols() != n + 1) fail(Errc::kBadShape, "jaw move needs an n x (n+1) matrix");
  auto col_ok = [&](int v) { return 1 <= v && v <= n + 1; };
  if (!col_ok(d) || !col_ok(e) || !col_ok(f) || g < 1 || g > n)
    fail(Errc::kBadOrder, "index out of range");
  if (d > e && e > f) {
    std::swap(d, f);
  } else if (!(d < e && e < f)) {
    fail(Errc::kBadOrder, "indices g,f,e,d are not in cyclic order");
  }

  auto no_row = [&](int cols_removed_1, int cols_removed_2, int row_removed) {
    std::vector<int> rs, cs;
    for (int i = 1; i <= n; ++i)
      if (i != row_removed) rs.push_back(i);
    for (int j = 1; j <= n + 1; ++j)
      if (j != cols_removed_1 && j != cols_removed_2) cs.push_back(j);
    return minor_det(m, rs, cs);
  };
  auto col_only = [&](int col_removed) { return no_row(col_removed, 0, 0); };

  IdentityCheck out;
  out.lhs = col_only(e) * no_row(d, f, g);
  out.rhs = col_only(d) * no_row(e, f, g) + col_only(f) * no_row(d, e, g);
  out.equal = out.lhs == out.rhs;
  return out;
}

IdentityCheck recurrence_check(const Matrix& m, const SemiContigSpec& spec) {
  validate_spec(spec);
  if (spec.side != SemiContigSpec::Side::kSM) fail(Errc::kBadSpec, "recurrence is stated for SM specs");
  const int s = spec.s();
  if (s < 2) fail(Errc::kBadSpec, "recurrence needs s >= 2");
  for (int v : spec.ks)
    if (v < 1) fail(Errc::kBadSpec, "blocks must be positive");
  for (int v : spec.ts)
    if (v < 1) fail(Errc::kBadSpec, "gaps must be positive");

  const int n = spec.n;
  auto make = [&](int da, int db, int dk1, int dks, int dklast_plus, int dtlast) {
    SemiContigSpec sp = spec;
    sp.a = wrap_index(spec.a + da, n);
    sp.b = wrap_index(spec.b + db, n);
    sp.ks.front() += dk1;
    sp.ks.back() += dks + dklast_plus;
    sp.ts.back() += dtlast;
    return sp;
  };
  auto value = [&](const SemiContigSpec& sp) { return sm_minor(m, sp); };

  // SM_{a,b}(k;t) SM_{a+1,b+1}(k_1-1,...;t_{s-1}-1)
  //   = SM_{a,b}(k;t_{s-1}-1) SM_{a+1,b+1}(k_1-1,...;t)
  //   + SM_{a,b+1}(k_1-1,...,k_s+1;t_{s-1}-1) SM_{a+1,b}(k_1,...,k_s-1;t)
  IdentityCheck out;
  out.lhs = value(make(0, 0, 0, 0, 0, 0)) * value(make(1, 1, -1, 0, 0, -1));
  out.rhs = value(make(0, 0, 0, 0, 0, -1)) * value(make(1, 1, -1, 0, 0, 0)) +
            value(make(0, 1, -1, 0, 1, -1)) * value(make(1, 0, 0, -1, 0, 0));
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace dominor
