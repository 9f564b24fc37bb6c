#pragma once

#include <cstddef>
#include <functional>
#include <tuple>
#include <vector>

#include "core/region.hpp"
#include "core/weights.hpp"

namespace dominor {

// A domino covers two edge-adjacent cells; a is the lexicographically
// smaller cell, so horizontal dominoes have b = a + (1,0) and vertical ones
// b = a + (0,1).
struct Domino {
  Cell a, b;
  friend auto operator<=>(const Domino&, const Domino&) = default;
};

Domino make_domino(Cell c1, Cell c2);

// Midpoints of the two long sides (the endpoints of the shared cell edge).
std::pair<Point, Point> domino_midpoints(const Domino& d);

// 1 / (v_{p1} v_{p2}) at the midpoints; GenericityViolation if a factor is 0.
Rational domino_weight(const Domino& d, const WeightMap& w);
// The monomial v_{p1}^{-1} v_{p2}^{-1}.
LaurentPoly domino_weight_symbolic(const Domino& d);

using Tiling = std::vector<Domino>;

inline constexpr std::size_t kEnumerationCellCap = 48;
inline constexpr std::size_t kSymbolicTilingCap = 1'000'000;

// Emits every domino tiling of r exactly once (the empty region has one empty
// tiling). CapExceeded beyond cell_cap cells.
void enumerate_tilings(const Region& r, const std::function<void(const Tiling&)>& emit,
                       std::size_t cell_cap = kEnumerationCellCap);

std::size_t count_tilings(const Region& r, std::size_t cell_cap = kEnumerationCellCap);

// W(R): the sum of tiling weights, by broken-profile dynamic programming over
// a denominator-cleared integer state. 0 when untileable, 1 for the formal
// empty region. GenericityViolation if a needed v vanishes.
Rational weight_sum(const Region& r, const WeightMap& w);

// Brute-force enumeration oracle for W(R).
Rational weight_sum_enumerated(const Region& r, const WeightMap& w,
                               std::size_t cell_cap = kEnumerationCellCap);

// W(R) as a Laurent polynomial (every point its own variable).
LaurentPoly weight_sum_symbolic(const Region& r, std::size_t tiling_cap = kSymbolicTilingCap);

// F(R): the product of v over the covering points (v at the anchor for the
// formal empty region).
Rational covering_monomial(const Region& r, const WeightMap& w);
LaurentPoly covering_monomial_symbolic(const Region& r);

// P(R) = F(R) W(R).
Rational tiling_polynomial(const Region& r, const WeightMap& w);
LaurentPoly tiling_polynomial_symbolic(const Region& r, std::size_t tiling_cap = kSymbolicTilingCap);

// Dual graph of a region: one vertex per cell, edges between edge-adjacent
// cells, weighted like the corresponding dominoes; vertex classes by
// checkerboard color (cell (x,y) is in class 0 iff x+y is even, flipped by
// flip_colors).
struct DualGraph {
  std::vector<Cell> vertices;
  std::vector<std::tuple<int, int, Rational>> edges;  // (i, j, weight), i < j
  std::vector<int> color;                             // 0 or 1 per vertex

  static DualGraph from_region(const Region& r, const WeightMap& w, bool flip_colors = false);

  int vertex_of(Cell c) const;  // -1 if absent
  std::size_t class_count(int cls) const;
};

// Sum of perfect-matching weights of the graph minus the given vertices.
Rational matching_weight_sum(const DualGraph& g, const std::vector<int>& removed);

struct KuoCheck {
  bool equal = false;
  Rational lhs, rhs;
};

// Exact check of Kuo's condensation identities (variants 5.1, 5.2, 5.3) for
// four vertices in cyclic order on the outer face.
KuoCheck kuo_check(const DualGraph& g, int u, int v, int w, int s, int variant);

}  // namespace dominor
