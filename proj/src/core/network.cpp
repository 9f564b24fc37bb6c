#include "core/network.hpp"

#include <algorithm>
#include <queue>

#include "core/error.hpp"
#include "core/minors.hpp"

namespace dominor {

void Network::validate() const {
  if (n < 1) fail(Errc::kInvalidParams, "network needs at least one boundary node");
  if (interior < 0) fail(Errc::kInvalidParams, "negative interior count");
  const int v = vertex_count();
  std::vector<std::vector<int>> adj(v + 1);
  for (const auto& [a, b, c] : edges) {
    if (a < 1 || a > v || b < 1 || b > v || a == b)
      fail(Errc::kInvalidParams, "edge endpoint out of range");
    if (c <= 0) fail(Errc::kInvalidParams, "conductances must be positive");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // Connectivity.
  std::vector<std::uint8_t> seen(v + 1, 0);
  std::queue<int> q;
  q.push(1);
  seen[1] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int x : adj[u])
      if (!seen[x]) {
        seen[x] = 1;
        ++reached;
        q.push(x);
      }
  }
  if (reached != v) fail(Errc::kInvalidParams, "network graph is not connected");
}

Matrix laplacian(const Network& net) {
  const int v = net.vertex_count();
  Matrix l(v, v);
  for (const auto& [a, b, c] : net.edges) {
    l.at(a - 1, a - 1) += c;
    l.at(b - 1, b - 1) += c;
    l.at(a - 1, b - 1) -= c;
    l.at(b - 1, a - 1) -= c;
  }
  return l;
}

Matrix response_matrix(const Network& net) {
  net.validate();
  const int n = net.n, m = net.interior;
  Matrix l = laplacian(net);
  if (m == 0) {
    Matrix lambda(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) lambda.at(i, j) = l.at(i, j);
    return lambda;
  }

  // Solve L_II X = L_IN by exact Gaussian elimination on [L_II | L_IN].
  Matrix aug(m, m + n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) aug.at(i, j) = l.at(n + i, n + j);
    for (int j = 0; j < n; ++j) aug.at(i, m + j) = l.at(n + i, j);
  }
  for (int k = 0; k < m; ++k) {
    int piv = -1;
    for (int i = k; i < m; ++i)
      if (aug.at(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) fail(Errc::kSingularInterior, "interior Laplacian block is singular");
    if (piv != k)
      for (int j = 0; j < m + n; ++j) std::swap(aug.at(k, j), aug.at(piv, j));
    for (int i = 0; i < m; ++i) {
      if (i == k || aug.at(i, k) == 0) continue;
      Rational f = aug.at(i, k) / aug.at(k, k);
      for (int j = k; j < m + n; ++j) aug.at(i, j) -= f * aug.at(k, j);
    }
  }

  Matrix lambda(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational s = l.at(i, j);
      for (int r = 0; r < m; ++r) {
        // X(r, j) = aug(r, m+j) / aug(r, r)
        if (l.at(i, n + r) != 0) s -= l.at(i, n + r) * aug.at(r, m + j) / aug.at(r, r);
      }
      lambda.at(i, j) = s;
    }
  return lambda;
}

MinorTest well_connected_by_minors(const Matrix& lambda) {
  MinorTest out;
  for (const auto& [xy, value] : small_central_minors(lambda)) {
    const int y = xy.second;
    Rational normalized = (y % 2 == 1) ? Rational(-value) : value;  // (-1)^y
    if (normalized <= 0) {
      out.first_failure = xy;
      return out;
    }
  }
  out.well_connected = true;
  return out;
}

bool non_interlaced(const std::vector<int>& a, const std::vector<int>& b, int n) {
  // Walk the circle once; the A/B labels must form at most two runs.
  std::vector<int> label(n + 1, 0);
  for (int x : a) label[x] = 1;
  for (int x : b) label[x] = 2;
  std::vector<int> word;
  for (int i = 1; i <= n; ++i)
    if (label[i]) word.push_back(label[i]);
  if (word.empty()) return true;
  int changes = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i] != word[(i + 1) % word.size()]) ++changes;
  return changes <= 2;
}

int disjoint_path_count(const Network& net, const std::vector<int>& a, const std::vector<int>& b) {
  const int v = net.vertex_count();
  // Vertex splitting: node x -> in 2x, out 2x+1, capacity-1 arc between.
  const int nodes = 2 * (v + 1) + 2;
  const int src = 0, dst = 1;
  std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
  auto in = [](int x) { return 2 * x; };
  auto out = [](int x) { return 2 * x + 1; };
  for (int x = 1; x <= v; ++x) cap[in(x)][out(x)] = 1;
  for (const auto& [u, w, c] : net.edges) {
    cap[out(u)][in(w)] = 1;
    cap[out(w)][in(u)] = 1;
  }
  for (int x : a) cap[src][in(x)] = 1;
  for (int x : b) cap[out(x)][dst] = 1;

  int flow = 0;
  for (;;) {
    std::vector<int> prev(nodes, -1);
    prev[src] = src;
    std::queue<int> q;
    q.push(src);
    while (!q.empty() && prev[dst] < 0) {
      int u = q.front();
      q.pop();
      for (int w = 0; w < nodes; ++w)
        if (cap[u][w] > 0 && prev[w] < 0) {
          prev[w] = u;
          q.push(w);
        }
    }
    if (prev[dst] < 0) break;
    for (int w = dst; w != src; w = prev[w]) {
      cap[prev[w]][w] -= 1;
      cap[w][prev[w]] += 1;
    }
    ++flow;
  }
  return flow;
}

bool well_connected_by_paths(const Network& net, int node_cap) {
  net.validate();
  if (net.n > node_cap) fail(Errc::kSizeCapExceeded, "paths oracle is capped at n <= 7");
  const int n = net.n;
  // All disjoint pairs (A, B) of equal size, non-interlaced.
  for (int mask_a = 1; mask_a < (1 << n); ++mask_a) {
    for (int mask_b = 1; mask_b < (1 << n); ++mask_b) {
      if (mask_a & mask_b) continue;
      if (__builtin_popcount(mask_a) != __builtin_popcount(mask_b)) continue;
      std::vector<int> a, b;
      for (int i = 0; i < n; ++i) {
        if (mask_a & (1 << i)) a.push_back(i + 1);
        if (mask_b & (1 << i)) b.push_back(i + 1);
      }
      if (!non_interlaced(a, b, n)) continue;
      if (disjoint_path_count(net, a, b) < static_cast<int>(a.size())) return false;
    }
  }
  return true;
}

}  // namespace dominor
