#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "core/matrix.hpp"

namespace dominor {

// Circular planar electrical network: boundary nodes 1..n placed
// counter-clockwise on the circle, interior vertices n+1..n+interior,
// positive rational conductances. The rotation system is a combinatorial
// embedding witness (cyclic neighbor order per vertex); it is stored and
// trusted, not re-verified.
struct Network {
  int n = 0;
  int interior = 0;
  std::vector<std::tuple<int, int, Rational>> edges;
  std::map<int, std::vector<int>> rotation;

  int vertex_count() const { return n + interior; }
  void validate() const;  // ranges, positivity, connectivity
};

// Weighted Kirchhoff Laplacian over all vertices (boundary first).
Matrix laplacian(const Network& net);

// Response matrix by Schur complement: L_NN - L_NI L_II^{-1} L_IN.
// The result is symmetric with zero row and column sums.
Matrix response_matrix(const Network& net);

struct MinorTest {
  bool well_connected = false;
  std::optional<Point> first_failure;  // (x, y) of the first non-positive minor
};

// Kenyon-Wilson test: positivity of the C(n,2) small central minors of the
// response matrix, after the sign normalization (-1)^y per minor size y.
MinorTest well_connected_by_minors(const Matrix& lambda);

// Oracle: for every non-interlaced pair (A, B) with |A| = |B| = k there are k
// pairwise vertex-disjoint paths joining them. Exponential in n; capped.
bool well_connected_by_paths(const Network& net, int node_cap = 7);

// Max number of vertex-disjoint A-to-B paths (vertex-splitting max-flow).
int disjoint_path_count(const Network& net, const std::vector<int>& a, const std::vector<int>& b);

// True if the two equal-size index sets do not interlace around the circle.
bool non_interlaced(const std::vector<int>& a, const std::vector<int>& b, int n);

}  // namespace dominor
