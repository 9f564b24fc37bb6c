#include "core/region.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>

#include "core/error.hpp"

namespace dominor {

namespace {

// Staircase tent above the baseline: cells any part of which lies under the
// two slopes are cut. `ascent` and `descent` are the x-coordinates where the
// +45 / -45 degree slope lines cross the baseline. A cell at (x, y), y
// measured from the baseline, is under the tent iff
//   x - y >= ascent  and  x + y <= descent - 1.
struct Tent {
  int ascent;
  int descent;
};

struct TentSet {
  int baseline = 0;
  std::vector<Tent> tents;

  bool removed(int x, int y) const {
    const int dy = y - baseline;
    for (const Tent& t : tents)
      if (x - dy >= t.ascent && x + dy <= t.descent - 1) return true;
    return false;
  }
};

// A peak of height k occupies a base span of 2k-1 (an odd staircase
// triangle, single-cell apex row); a valley of depth t keeps a base span of
// 2t+1 between the neighboring slopes.

// Tents chained eastward from the base point of the first descent.
TentSet chain_east_from_descent(int first_descent, const std::vector<int>& ks,
                                const std::vector<int>& ts) {
  TentSet set;
  int d = first_descent;
  for (std::size_t j = 0; j < ks.size(); ++j) {
    int a;
    if (j == 0) {
      a = d - (2 * ks[0] - 1);
    } else {
      a = d + 2 * ts[j - 1] + 1;
      d = a + 2 * ks[j] - 1;
    }
    set.tents.push_back({a, d});
  }
  return set;
}

// Tents chained eastward from the base point of the first ascent.
TentSet chain_east_from_ascent(int first_ascent, const std::vector<int>& ks,
                               const std::vector<int>& ts) {
  TentSet set;
  int a = first_ascent;
  for (std::size_t j = 0; j < ks.size(); ++j) {
    const int d = a + 2 * ks[j] - 1;
    set.tents.push_back({a, d});
    if (j + 1 < ks.size()) a = d + 2 * ts[j] + 1;
  }
  return set;
}

// Tents chained westward from the base point of the last descent.
TentSet chain_west_from_descent(int last_descent, const std::vector<int>& ks,
                                const std::vector<int>& ts) {
  TentSet set;
  int d = last_descent;
  for (std::size_t j = ks.size(); j-- > 0;) {
    const int a = d - (2 * ks[j] - 1);
    set.tents.push_back({a, d});
    if (j > 0) d = a - (2 * ts[j - 1] + 1);
  }
  return set;
}

// Cell predicate for the Aztec rectangle AR_{x0,y0}^{m,n2}.
bool in_ar(int x, int y, int x0, int y0, int m, int n2) {
  const int s = (x - x0) + (y - y0);
  const int d = (x - x0) - (y - y0);
  return -m - 1 <= s && s <= m - 1 && -m <= d && d <= 2 * n2 - m;
}

// Cell predicate for the diamond AD_{c,0}^{h} (empty when h = 0).
bool in_diamond(int x, int y, int c, int h) {
  if (h <= 0) return false;
  const int s = (x - c) + y;
  const int d = (x - c) - y;
  return -h - 1 <= s && s <= h - 1 && -h <= d && d <= h;
}

// L-sum predicate: union of the two diamonds, cut back to the west diamond's
// SW slope line and the east diamond's NE slope line. Both cuts are no-ops in
// the V-shaped (no containment) case.
struct LsumPred {
  int cw, hw;  // west diamond
  int ce, he;  // east diamond

  bool operator()(int x, int y) const {
    if (!in_diamond(x, y, cw, hw) && !in_diamond(x, y, ce, he)) return false;
    if ((x - cw) - y < -hw) return false;          // west of the west diamond's SW slope
    if ((x - ce) + y > he - 1) return false;       // east of the east diamond's NE slope
    return true;
  }
};

}  // namespace

bool Region::contains(Cell c) const { return std::binary_search(cells.begin(), cells.end(), c); }

Region Region::from_cells(std::vector<Cell> cells, std::optional<Point> anchor_if_empty) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  Region r;
  r.cells = std::move(cells);
  if (r.cells.empty()) r.anchor = anchor_if_empty;
  return r;
}

Region build_aztec_diamond(int x0, int y0, int h) {
  if (h < 0) fail(Errc::kInvalidParams, "diamond order must be >= 0");
  std::vector<Cell> cells;
  for (int y = y0 - h; y < y0 + h; ++y)
    for (int x = x0 - h; x < x0 + h; ++x)
      if (in_diamond(x, y - y0, x0, h)) cells.push_back({x, y});
  return Region::from_cells(std::move(cells), Point{x0, y0});
}

Region build_tad(int x0, int y0, int h, int n) {
  if (h < 0 || n < 1) fail(Errc::kInvalidParams, "bad TAD parameters");
  Region ad = build_aztec_diamond(x0, y0, h);
  std::vector<Cell> cells;
  for (Cell c : ad.cells)
    if (c.y >= 0 && c.y + 1 <= n) cells.push_back(c);
  return Region::from_cells(std::move(cells), Point{x0, y0});
}

Region build_aztec_rectangle(int x0, int y0, int m, int n2) {
  if (m < 1 || n2 < 1) fail(Errc::kInvalidParams, "rectangle sides must be >= 1");
  std::vector<Cell> cells;
  for (int y = y0 - n2; y <= y0 + m; ++y)
    for (int x = x0 - m - 1; x <= x0 + n2; ++x)
      if (in_ar(x, y, x0, y0, m, n2)) cells.push_back({x, y});
  return Region::from_cells(std::move(cells), Point{x0, y0});
}

Region l_sum(Diamond a, Diamond b) {
  if (a.h < 1 || b.h < 1) fail(Errc::kInvalidParams, "l_sum needs diamonds of order >= 1");
  if (std::abs(a.x0 - b.x0) > a.h + b.h)
    fail(Errc::kDisjointDiamonds, "diamonds neither overlap nor touch");
  Diamond west = a.x0 <= b.x0 ? a : b;
  Diamond east = a.x0 <= b.x0 ? b : a;
  LsumPred pred{west.x0, west.h, east.x0, east.h};
  std::vector<Cell> cells;
  const int h = std::max(a.h, b.h);
  for (int y = -h; y < h; ++y)
    for (int x = std::min(a.x0 - a.h, b.x0 - b.h); x < std::max(a.x0 + a.h, b.x0 + b.h); ++x)
      if (pred(x, y)) cells.push_back({x, y});
  return Region::from_cells(std::move(cells), Point{a.x0, 0});
}

Region trim_below_path(const Region& r, const ZigzagPath& p) {
  const std::size_t s = p.peaks.size();
  if (s < 1 || p.valleys.size() + 1 != s) fail(Errc::kInvalidParams, "bad zigzag path");
  for (int k : p.peaks)
    if (k <= 0) fail(Errc::kInvalidParams, "peak heights must be positive");
  for (int t : p.valleys)
    if (t <= 0) fail(Errc::kInvalidParams, "valley depths must be positive");

  TentSet tents = p.extension == ZigzagPath::Extension::kPlus
                      ? chain_west_from_descent(p.anchor.first, p.peaks, p.valleys)
                      : chain_east_from_ascent(p.anchor.first, p.peaks, p.valleys);
  tents.baseline = p.anchor.second;

  std::vector<Cell> kept;
  for (Cell c : r.cells) {
    if (c.y <= tents.baseline - 1) {  // below the horizontal extension ray
      const bool under_ray = p.extension == ZigzagPath::Extension::kPlus
                                 ? c.x >= p.anchor.first
                                 : c.x <= p.anchor.first - 1;
      if (under_ray) continue;
    }
    if (tents.removed(c.x, c.y)) continue;
    kept.push_back(c);
  }
  return Region::from_cells(std::move(kept), p.anchor);
}

namespace {

void validate_q(const QParams& q) {
  const std::size_t s = q.ks.size();
  if (s < 1 || q.ts.size() + 1 != s)
    fail(Errc::kInvalidParams, "Q parameters need s >= 1 peaks and s-1 gaps");
  for (int k : q.ks)
    if (k <= 0) fail(Errc::kInvalidParams, "Q peak list has a nonpositive entry");
  for (int t : q.ts)
    if (t <= 0) fail(Errc::kInvalidParams, "Q gap list has a nonpositive entry");
  if (q.n < 1) fail(Errc::kInvalidParams, "Q needs n >= 1");
  if (std::abs(q.h.value) > q.n) fail(Errc::kInvalidParams, "|h| exceeds n");
  if (s >= 2 && q.h.value == 0 && q.h.zero_sign == SignedOffset::ZeroSign::kNA)
    fail(Errc::kInvalidParams, "h = 0 requires a 0+/0- flavor when s >= 2");
}

}  // namespace

Region build_q(const QParams& q) {
  validate_q(q);
  const int s = static_cast<int>(q.ks.size());
  const int k = std::accumulate(q.ks.begin(), q.ks.end(), 0);
  const int t = std::accumulate(q.ts.begin(), q.ts.end(), 0);
  const int k1 = q.ks.front();
  const int hv = q.h.value;
  const int x0 = q.x - hv;  // center of the k_1 block's diamond

  if (s == 1) {
    // TAD_{x-h,k_1}^{|h|,n}; symmetric about x0, so the mirror is itself.
    return build_tad(x0, k1, std::abs(hv), q.n);
  }

  TentSet tents;
  std::function<bool(int, int)> ambient;
  int bx_lo, bx_hi;  // cell x range to scan

  if (q.h.nonneg()) {
    // First descent along the SE slope of the k_1 block's diamond.
    tents = chain_east_from_descent(x0 + k1 - hv - 1, q.ks, q.ts);
    if (t < hv - k) {
      // Type 1: Aztec rectangle AR_{x-h,0}^{h+k_1, h-k+k_1}.
      const int m = hv + k1, n2 = hv - k + k1;
      ambient = [=](int x, int y) { return in_ar(x, y, x0, 0, m, n2); };
      bx_lo = x0 - m - 1;
      bx_hi = x0 + n2;
    } else {
      // Type 2: L-sum of AD_{x-h,0}^{h+k_1} and AD_{x-h+t,0}^{2k+t-h-k_1-1}.
      const int h1 = hv + k1, h2 = 2 * k + t - hv - k1 - 1;
      LsumPred pred{x0, h1, x0 + t, h2};
      ambient = pred;
      bx_lo = std::min(x0 - h1, x0 + t - h2);
      bx_hi = std::max(x0 + h1, x0 + t + h2);
    }
  } else {
    // Type 3 (h <= 0-): AR_{x-h+t,0}^{k+t-h-k_1, 2k+t-h-k_1}, path anchored
    // with its left endpoint at the rectangle's left corner.
    const int habs = -hv;
    const int xc = x0 + t;
    const int m = k + t + habs - k1, n2 = 2 * k + t + habs - k1;
    int first_ascent = xc - m;
    if (const char* env = std::getenv("DOMINOR_Q3")) {
      // Calibration hook: alternative anchors for the type-3 zigzag.
      const std::string v = env;
      if (v == "diamond") first_ascent = x0 - habs - k1 - 1;
      else if (v == "east") first_ascent = xc + m - 2 * (k + t);
      else if (v[0] == '+' || v[0] == '-') first_ascent += std::atoi(env);
    }
    tents = chain_east_from_ascent(first_ascent, q.ks, q.ts);
    ambient = [=](int x, int y) { return in_ar(x, y, xc, 0, m, n2); };
    bx_lo = xc - m - 1;
    bx_hi = xc + n2;
  }

  std::vector<Cell> cells;
  for (int y = 0; y <= q.n - 1; ++y)
    for (int x = bx_lo; x <= bx_hi; ++x)
      if (ambient(x, y) && !tents.removed(x, y)) cells.push_back({x, y});

  Region r = Region::from_cells(std::move(cells), Point{x0, k1});
  if (q.mirrored) r = reflect_x(r, x0);
  return r;
}

std::set<Point> covering_points(const Region& r) {
  if (r.empty()) {
    if (!r.anchor) fail(Errc::kInternal, "empty region without anchor");
    return {*r.anchor};
  }
  std::map<Point, int> incidence;
  for (Cell c : r.cells) {
    ++incidence[{c.x, c.y}];
    ++incidence[{c.x + 1, c.y}];
    ++incidence[{c.x, c.y + 1}];
    ++incidence[{c.x + 1, c.y + 1}];
  }
  std::set<Point> pts;
  for (const auto& [p, count] : incidence)
    if (count >= 2) pts.insert(p);
  return pts;
}

Region translate(const Region& r, int dx, int dy) {
  std::vector<Cell> cells;
  cells.reserve(r.cells.size());
  for (Cell c : r.cells) cells.push_back({c.x + dx, c.y + dy});
  std::optional<Point> anchor;
  if (r.anchor) anchor = Point{r.anchor->first + dx, r.anchor->second + dy};
  return Region::from_cells(std::move(cells), anchor);
}

Region reflect_x(const Region& r, int axis) {
  std::vector<Cell> cells;
  cells.reserve(r.cells.size());
  for (Cell c : r.cells) cells.push_back({2 * axis - 1 - c.x, c.y});
  std::optional<Point> anchor;
  if (r.anchor) anchor = Point{2 * axis - r.anchor->first, r.anchor->second};
  return Region::from_cells(std::move(cells), anchor);
}

}  // namespace dominor
