#pragma once

#include <optional>
#include <set>
#include <vector>

#include "core/laurent.hpp"
#include "core/signed_offset.hpp"

namespace dominor {

// Unit lattice cell [x,x+1] x [y,y+1]; its center is (x+1/2, y+1/2).
struct Cell {
  int x, y;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A finite set of cells, coordinate-anchored (weights depend on absolute
// coordinates). The formal empty region carries an anchor point instead.
struct Region {
  std::vector<Cell> cells;             // sorted, no duplicates
  std::optional<Point> anchor;         // present iff cells is empty

  bool empty() const { return cells.empty(); }
  bool contains(Cell c) const;
  static Region from_cells(std::vector<Cell> cells, std::optional<Point> anchor_if_empty = {});
};

// Aztec diamond of order h centered at (x0, y0): cells inside the contour
// |x-x0| + |y-y0| = h+1. Order 0 is the formal empty region anchored (x0,y0).
Region build_aztec_diamond(int x0, int y0, int h);

// Portion of the Aztec diamond between the lines y=0 and y=n.
Region build_tad(int x0, int y0, int h, int n);

// Aztec rectangle of size m x n2 (m = steps on the NW/SE staircases, n2 = NE/SW)
// centered so x=x0 bisects the top length-2 step and y=y0 bisects the left
// length-2 vertical step.
Region build_aztec_rectangle(int x0, int y0, int m, int n2);

// Diamond on the baseline y = 0, for L-sums.
struct Diamond {
  int x0;  // center x
  int h;   // order, >= 0
};

// L-sum of two overlapping diamonds centered on y=0: their union when neither
// contains the other (V shape), otherwise the union cut back to the inner
// diamond's far slope (L shape). Throws DisjointDiamonds.
Region l_sum(Diamond a, Diamond b);

// Zigzag path of north/east steps: peaks of heights ks above the baseline
// alternating with valleys of depths ts below it, extended horizontally to
// +inf (plus) or -inf (minus). The anchor pins the right endpoint for a plus
// extension and the left endpoint for a minus extension.
struct ZigzagPath {
  std::vector<int> peaks;    // k_1..k_s, all > 0
  std::vector<int> valleys;  // t_1..t_{s-1}, all > 0
  enum class Extension { kPlus, kMinus } extension = Extension::kPlus;
  Point anchor{0, 0};
};

// Keeps the cells of r strictly above the infinite path; any cell part of
// which lies below the path is removed.
Region trim_below_path(const Region& r, const ZigzagPath& p);

// Parameters of a Q / Q-bar region.
struct QParams {
  int x = 0;
  SignedOffset h;
  std::vector<int> ks;  // k_1..k_s, all > 0
  std::vector<int> ts;  // t_1..t_{s-1}, all > 0
  int n = 0;            // matrix size (strip height)
  bool mirrored = false;
};

// Builds the Q (mirrored=false) or Q-bar (mirrored=true) region.
// Requires a normalized parameter list (all entries positive); s=1 gives the
// truncated Aztec diamond TAD_{x-h,k_1}^{|h|,n}.
Region build_q(const QParams& params);

// Lattice points incident to at least two cells of the region ("covering
// points"); the singleton {anchor} for the formal empty region.
std::set<Point> covering_points(const Region& r);

Region translate(const Region& r, int dx, int dy);

// Mirror image across the vertical lattice line x = axis.
Region reflect_x(const Region& r, int axis);

}  // namespace dominor
