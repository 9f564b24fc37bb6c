#include "core/tiling.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>

#include "core/error.hpp"

namespace dominor {

namespace {

std::string point_name(Point p) {
  return "v_{" + std::to_string(p.first) + "," + std::to_string(p.second) + "}";
}

}  // namespace

Domino make_domino(Cell c1, Cell c2) {
  if (c2 < c1) std::swap(c1, c2);
  const bool horiz = c2.x == c1.x + 1 && c2.y == c1.y;
  const bool vert = c2.x == c1.x && c2.y == c1.y + 1;
  if (!horiz && !vert) fail(Errc::kInvalidParams, "domino cells must be edge-adjacent");
  return {c1, c2};
}

std::pair<Point, Point> domino_midpoints(const Domino& d) {
  if (d.b.x == d.a.x + 1) {
    // Horizontal: long sides above and below; midpoints are the endpoints of
    // the shared vertical edge x = a.x+1.
    return {{d.a.x + 1, d.a.y}, {d.a.x + 1, d.a.y + 1}};
  }
  // Vertical: midpoints are the endpoints of the shared horizontal edge.
  return {{d.a.x, d.a.y + 1}, {d.a.x + 1, d.a.y + 1}};
}

Rational domino_weight(const Domino& d, const WeightMap& w) {
  const auto [p1, p2] = domino_midpoints(d);
  const Rational v1 = w.value(p1), v2 = w.value(p2);
  if (v1 == 0) fail(Errc::kGenericityViolation, point_name(p1) + " vanishes");
  if (v2 == 0) fail(Errc::kGenericityViolation, point_name(p2) + " vanishes");
  return Rational(1) / (v1 * v2);
}

LaurentPoly domino_weight_symbolic(const Domino& d) {
  const auto [p1, p2] = domino_midpoints(d);
  ExpVec e;
  e[p1] -= 1;
  e[p2] -= 1;
  return LaurentPoly::monomial(e);
}

namespace {

struct Grid {
  int xmin = 0, ymin = 0, w = 0, h = 0;
  bool transposed = false;
  std::vector<std::uint8_t> in;  // column-major: (x * h + y)

  // DP grid coordinates back to the original cell.
  Cell orig(int gx, int gy) const {
    if (transposed) return {xmin + gy, ymin + gx};
    return {xmin + gx, ymin + gy};
  }
};

Grid make_grid(const Region& r) {
  Grid g;
  int xmin = r.cells[0].x, xmax = xmin, ymin = r.cells[0].y, ymax = ymin;
  for (Cell c : r.cells) {
    xmin = std::min(xmin, c.x);
    xmax = std::max(xmax, c.x);
    ymin = std::min(ymin, c.y);
    ymax = std::max(ymax, c.y);
  }
  int w = xmax - xmin + 1, h = ymax - ymin + 1;
  g.transposed = h > w;
  if (g.transposed) std::swap(w, h);
  g.xmin = xmin;
  g.ymin = ymin;
  g.w = w;
  g.h = h;
  g.in.assign(static_cast<std::size_t>(w) * h, 0);
  for (Cell c : r.cells) {
    int gx = g.transposed ? c.y - ymin : c.x - xmin;
    int gy = g.transposed ? c.x - xmin : c.y - ymin;
    g.in[static_cast<std::size_t>(gx) * h + gy] = 1;
  }
  return g;
}

bool color_balanced(const Region& r) {
  long bal = 0;
  for (Cell c : r.cells) bal += ((c.x + c.y) & 1) ? 1 : -1;
  return bal == 0;
}

}  // namespace

void enumerate_tilings(const Region& r, const std::function<void(const Tiling&)>& emit,
                       std::size_t cell_cap) {
  if (r.cells.size() > cell_cap)
    fail(Errc::kCapExceeded, "region exceeds the enumeration cap of " + std::to_string(cell_cap));
  if (r.empty()) {
    emit({});
    return;
  }
  if (r.cells.size() % 2 || !color_balanced(r)) return;

  const std::vector<Cell>& cells = r.cells;
  const std::size_t n = cells.size();
  std::map<Cell, int> index;
  for (std::size_t i = 0; i < n; ++i) index[cells[i]] = static_cast<int>(i);
  auto find = [&](Cell c) {
    auto it = index.find(c);
    return it == index.end() ? -1 : it->second;
  };

  std::vector<std::uint8_t> used(n, 0);
  Tiling tiling;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    std::size_t i = from;
    while (i < n && used[i]) ++i;
    if (i == n) {
      emit(tiling);
      return;
    }
    used[i] = 1;
    const Cell c = cells[i];
    // Partners with larger index: right and top neighbor.
    for (Cell nb : {Cell{c.x + 1, c.y}, Cell{c.x, c.y + 1}}) {
      int j = find(nb);
      if (j < 0 || used[j]) continue;
      used[j] = 1;
      tiling.push_back({c, nb});
      rec(i + 1);
      tiling.pop_back();
      used[j] = 0;
    }
    used[i] = 0;
  };
  rec(0);
}

std::size_t count_tilings(const Region& r, std::size_t cell_cap) {
  std::size_t count = 0;
  enumerate_tilings(r, [&](const Tiling&) { ++count; }, cell_cap);
  return count;
}

Rational weight_sum_enumerated(const Region& r, const WeightMap& w, std::size_t cell_cap) {
  Rational sum(0);
  enumerate_tilings(
      r,
      [&](const Tiling& t) {
        Rational prod(1);
        for (const Domino& d : t) prod *= domino_weight(d, w);
        sum += prod;
      },
      cell_cap);
  return sum;
}

namespace {

// Per-domino transition constants for the denominator-cleared DP: placing the
// domino multiplies the integer state by num and exactly divides it by den.
struct DominoConst {
  Int num = 1, den = 1;
  bool trivial = true;
};

}  // namespace

// Broken-profile DP over an integer state. True tiling weights are products
// of 1/(v_p1 v_p2); every state is kept scaled by prod alpha_p^2 over the
// midpoints p whose columns the sweep has entered (v_p = alpha_p / beta_p in
// lowest terms), so transitions stay in integers and exact division by the
// alpha factors is always possible: a midpoint can serve at most two dominoes
// and its alpha exponent in the scaled state stays nonnegative.
Rational weight_sum(const Region& r, const WeightMap& w) {
  if (r.empty()) return Rational(1);
  if (r.cells.size() % 2 || !color_balanced(r)) return Rational(0);

  const Grid g = make_grid(r);
  const int W = g.w, H = g.h;
  if (H > 20) fail(Errc::kCapExceeded, "region frontier exceeds 20 rows");

  const std::size_t positions = static_cast<std::size_t>(W) * H;
  auto at = [&](int gx, int gy) { return g.in[static_cast<std::size_t>(gx) * H + gy]; };

  // Collect midpoint values and per-domino constants.
  std::map<Point, std::pair<Int, Int>> mid_vals;  // point -> (alpha, beta)
  auto midpoint_of = [&](Point p) -> std::pair<Int, Int>& {
    auto it = mid_vals.find(p);
    if (it == mid_vals.end()) {
      Rational v = w.value(p);
      if (v == 0) fail(Errc::kGenericityViolation, point_name(p) + " vanishes");
      it = mid_vals.emplace(p, std::make_pair(Int(v.get_num()), Int(v.get_den()))).first;
    }
    return it->second;
  };

  std::vector<DominoConst> vert(positions), horiz(positions);
  std::map<Point, int> mid_first_col;  // earliest DP column referencing the midpoint
  bool any_nontrivial = false;
  for (int gx = 0; gx < W; ++gx) {
    for (int gy = 0; gy < H; ++gy) {
      const std::size_t p = static_cast<std::size_t>(gx) * H + gy;
      if (!g.in[p]) continue;
      auto fill = [&](DominoConst& dc, Cell c1, Cell c2) {
        const Domino d = make_domino(c1, c2);
        const auto [m1, m2] = domino_midpoints(d);
        auto& v1 = midpoint_of(m1);
        auto& v2 = midpoint_of(m2);
        for (Point mp : {m1, m2}) {
          auto it = mid_first_col.find(mp);
          if (it == mid_first_col.end() || it->second > gx) mid_first_col[mp] = gx;
        }
        dc.num = v1.second * v2.second;
        dc.den = v1.first * v2.first;
        dc.trivial = dc.num == 1 && dc.den == 1;
        if (!dc.trivial) any_nontrivial = true;
      };
      if (gy + 1 < H && at(gx, gy + 1)) fill(vert[p], g.orig(gx, gy), g.orig(gx, gy + 1));
      if (gx + 1 < W && at(gx + 1, gy)) fill(horiz[p], g.orig(gx, gy), g.orig(gx + 1, gy));
    }
  }

  // alpha^2 products scheduled per column, and the total scale.
  std::vector<Int> col_scale(W, Int(1));
  Int total_scale = 1;
  for (const auto& [mp, col] : mid_first_col) {
    const Int& alpha = mid_vals[mp].first;
    if (alpha == 1 || alpha == -1) continue;  // alpha^2 = 1
    Int a2 = alpha * alpha;
    col_scale[col] *= a2;
    total_scale *= a2;
  }

  const std::uint32_t size = 1u << H;
  const std::uint32_t top = 1u << (H - 1);
  std::vector<mpz_class> cur(size), nxt(size);
  std::vector<std::uint32_t> cur_live, nxt_live;
  std::vector<std::uint8_t> in_nxt(size, 0);
  cur[0] = 1;
  cur_live.push_back(0);

  mpz_class tmp;
  auto push = [&](std::uint32_t mask, const mpz_class& val) {
    if (!in_nxt[mask]) {
      in_nxt[mask] = 1;
      nxt_live.push_back(mask);
      nxt[mask] = val;
    } else {
      nxt[mask] += val;
    }
  };

  for (std::size_t p = 0; p < positions; ++p) {
    const int gx = static_cast<int>(p) / H;
    const int gy = static_cast<int>(p) % H;
    if (gy == 0 && any_nontrivial && col_scale[gx] != 1) {
      for (std::uint32_t m : cur_live) cur[m] *= col_scale[gx];
    }
    nxt_live.clear();
    for (std::uint32_t m : cur_live) {
      mpz_class& val = cur[m];
      if (val == 0) continue;
      if ((m & 1u) || !g.in[p]) {
        push(m >> 1, val);
        continue;
      }
      const DominoConst& vd = vert[p];
      if (gy + 1 < H && at(gx, gy + 1) && !(m & 2u)) {
        if (vd.trivial) {
          push((m | 2u) >> 1, val);
        } else {
          tmp = val * vd.num;
          mpz_divexact(tmp.get_mpz_t(), tmp.get_mpz_t(), vd.den.get_mpz_t());
          push((m | 2u) >> 1, tmp);
        }
      }
      const DominoConst& hd = horiz[p];
      if (gx + 1 < W && at(gx + 1, gy)) {
        if (hd.trivial) {
          push((m >> 1) | top, val);
        } else {
          tmp = val * hd.num;
          mpz_divexact(tmp.get_mpz_t(), tmp.get_mpz_t(), hd.den.get_mpz_t());
          push((m >> 1) | top, tmp);
        }
      }
    }
    for (std::uint32_t m : nxt_live) in_nxt[m] = 0;
    std::swap(cur, nxt);
    std::swap(cur_live, nxt_live);
  }

  mpz_class result(0);
  for (std::uint32_t m : cur_live)
    if (m == 0) result = cur[0];
  Rational out(result, total_scale);
  out.canonicalize();
  return out;
}

LaurentPoly weight_sum_symbolic(const Region& r, std::size_t tiling_cap) {
  LaurentPoly sum;
  std::size_t count = 0;
  enumerate_tilings(
      r,
      [&](const Tiling& t) {
        if (++count > tiling_cap) fail(Errc::kCapExceeded, "symbolic tiling cap exceeded");
        ExpVec e;
        for (const Domino& d : t) {
          const auto [p1, p2] = domino_midpoints(d);
          if (--e[p1] == 0) e.erase(p1);
          if (--e[p2] == 0) e.erase(p2);
        }
        sum.add_term(e, Rational(1));
      },
      r.cells.size());
  return sum;
}

Rational covering_monomial(const Region& r, const WeightMap& w) {
  Rational prod(1);
  for (Point p : covering_points(r)) prod *= w.value(p);
  return prod;
}

LaurentPoly covering_monomial_symbolic(const Region& r) {
  ExpVec e;
  for (Point p : covering_points(r)) e[p] += 1;
  return LaurentPoly::monomial(e);
}

Rational tiling_polynomial(const Region& r, const WeightMap& w) {
  return covering_monomial(r, w) * weight_sum(r, w);
}

LaurentPoly tiling_polynomial_symbolic(const Region& r, std::size_t tiling_cap) {
  return covering_monomial_symbolic(r) * weight_sum_symbolic(r, tiling_cap);
}

DualGraph DualGraph::from_region(const Region& r, const WeightMap& w, bool flip_colors) {
  DualGraph g;
  g.vertices = r.cells;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const Cell c = g.vertices[i];
    g.color.push_back((((c.x + c.y) & 1) != 0) != flip_colors ? 1 : 0);
    for (Cell nb : {Cell{c.x + 1, c.y}, Cell{c.x, c.y + 1}}) {
      int j = g.vertex_of(nb);
      if (j >= 0) g.edges.emplace_back(static_cast<int>(i), j, domino_weight(make_domino(c, nb), w));
    }
  }
  return g;
}

int DualGraph::vertex_of(Cell c) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), c);
  if (it == vertices.end() || !(*it == c)) return -1;
  return static_cast<int>(it - vertices.begin());
}

std::size_t DualGraph::class_count(int cls) const {
  return std::count(color.begin(), color.end(), cls);
}

Rational matching_weight_sum(const DualGraph& g, const std::vector<int>& removed) {
  const std::size_t n = g.vertices.size();
  std::vector<std::vector<std::pair<int, const Rational*>>> adj(n);
  for (const auto& [i, j, wt] : g.edges) {
    adj[i].push_back({j, &wt});
    adj[j].push_back({i, &wt});
  }
  std::vector<std::uint8_t> gone(n, 0);
  for (int v : removed) {
    if (v < 0 || v >= static_cast<int>(n)) fail(Errc::kInvalidParams, "vertex out of range");
    gone[v] = 1;
  }

  Rational total(0);
  Rational prod(1);
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    std::size_t i = from;
    while (i < n && gone[i]) ++i;
    if (i == n) {
      total += prod;
      return;
    }
    gone[i] = 1;
    for (const auto& [j, wt] : adj[i]) {
      if (gone[j]) continue;
      gone[j] = 1;
      Rational keep = prod;
      prod *= *wt;
      rec(i + 1);
      prod = keep;
      gone[j] = 0;
    }
    gone[i] = 0;
  };
  rec(0);
  return total;
}

namespace {

// Exact cyclic-order test: the four cell centers must appear in strictly
// cyclic angular order (either orientation) around their centroid.
bool cyclic_on_face(const DualGraph& g, int a, int b, int c, int d) {
  const int ids[4] = {a, b, c, d};
  long cx = 0, cy = 0;
  for (int id : ids) {
    cx += 2 * g.vertices[id].x + 1;
    cy += 2 * g.vertices[id].y + 1;
  }
  // Vectors scaled by 4 to keep integers: p_i*4 - centroid*... use 4*p - sum.
  long vx[4], vy[4];
  for (int i = 0; i < 4; ++i) {
    vx[i] = 4L * (2 * g.vertices[ids[i]].x + 1) - cx;
    vy[i] = 4L * (2 * g.vertices[ids[i]].y + 1) - cy;
    if (vx[i] == 0 && vy[i] == 0) return false;
  }
  bool collinear = true;
  for (int i = 1; i < 4 && collinear; ++i)
    if (vx[0] * vy[i] - vy[0] * vx[i] != 0) collinear = false;
  if (collinear) {
    // Cells strung along one line: cyclic order means monotone order.
    auto key = [&](int i) { return std::abs(vx[i]) > std::abs(vy[i]) ? vx[i] : vy[i]; };
    bool inc = true, dec = true;
    for (int i = 0; i + 1 < 4; ++i) {
      if (key(i) >= key(i + 1)) inc = false;
      if (key(i) <= key(i + 1)) dec = false;
    }
    return inc || dec;
  }
  auto half = [](long x, long y) { return (y > 0 || (y == 0 && x > 0)) ? 0 : 1; };
  auto less_ccw = [&](int i, int j) {
    int hi = half(vx[i], vy[i]), hj = half(vx[j], vy[j]);
    if (hi != hj) return hi < hj;
    long cross = vx[i] * vy[j] - vy[i] * vx[j];
    return cross > 0;
  };
  // The sequence is cyclic iff exactly one descent occurs around the cycle,
  // in one of the two traversal directions.
  for (int dir = 0; dir < 2; ++dir) {
    int descents = 0;
    for (int i = 0; i < 4; ++i) {
      int pi = dir ? 3 - i : i;
      int pj = dir ? (6 - i) % 4 : (i + 1) % 4;
      if (!less_ccw(pi, pj)) ++descents;
    }
    if (descents == 1) return true;
  }
  return false;
}

}  // namespace

KuoCheck kuo_check(const DualGraph& g, int u, int v, int w, int s, int variant) {
  const int n = static_cast<int>(g.vertices.size());
  for (int id : {u, v, w, s})
    if (id < 0 || id >= n) fail(Errc::kInvalidParams, "vertex out of range");
  if (u == v || u == w || u == s || v == w || v == s || w == s)
    fail(Errc::kInvalidParams, "vertices must be distinct");
  if (!cyclic_on_face(g, u, v, w, s))
    fail(Errc::kBadCyclicOrder, "u,v,w,s are not in cyclic order");

  const std::size_t n0 = g.class_count(0), n1 = g.class_count(1);
  auto need = [&](bool ok) {
    if (!ok) fail(Errc::kBadBipartition, "vertex classes do not match the variant");
  };
  auto W = [&](std::vector<int> rem) { return matching_weight_sum(g, rem); };

  KuoCheck out;
  switch (variant) {
    case 1:
      need(g.color[u] == g.color[w] && g.color[v] == g.color[s] && g.color[u] != g.color[v]);
      need(n0 == n1);
      out.lhs = W({}) * W({u, v, w, s});
      out.rhs = W({u, v}) * W({w, s}) + W({u, s}) * W({v, w});
      break;
    case 2:
      need(g.color[u] == g.color[v] && g.color[v] == g.color[w] && g.color[s] != g.color[u]);
      need((g.color[u] == 0 ? n0 : n1) == (g.color[u] == 0 ? n1 : n0) + 1);
      out.lhs = W({v}) * W({u, w, s});
      out.rhs = W({u}) * W({v, w, s}) + W({w}) * W({u, v, s});
      break;
    case 3:
      need(g.color[u] == g.color[v] && g.color[w] == g.color[s] && g.color[u] != g.color[w]);
      need(n0 == n1);
      out.lhs = W({u, s}) * W({v, w});
      out.rhs = W({}) * W({u, v, w, s}) + W({u, w}) * W({v, s});
      break;
    default:
      fail(Errc::kInvalidParams, "variant must be 1, 2 or 3");
  }
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace dominor
