// Test-only oracles, deliberately independent of the library's algorithms:
// planarity by Kuratowski-subdivision search, isomorphism by exhaustive
// matching, bipartiteness by exhaustive 2-coloring, and cubic-graph
// generation by adjacency-matrix backtracking.
#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "kempe/multigraph.hpp"

namespace kempe::oracle {

namespace detail {

struct PathRouter {
  int n;
  std::vector<std::vector<char>> adj;
  std::vector<char> blocked;  // branch vertices and path internals
  std::vector<std::pair<int, int>> pairs;

  bool route(size_t idx) {
    if (idx == pairs.size()) return true;
    return extend(pairs[idx].first, pairs[idx].second, idx);
  }

  bool extend(int cur, int t, size_t idx) {
    if (adj[cur][t] && route(idx + 1)) return true;
    for (int w = 0; w < n; ++w) {
      if (!adj[cur][w] || blocked[w] || w == t) continue;
      blocked[w] = 1;
      if (extend(w, t, idx)) return true;
      blocked[w] = 0;
    }
    return false;
  }
};

inline std::vector<std::vector<char>> simple_adjacency(const MultiGraph& g) {
  std::vector<std::vector<char>> adj(g.vertex_count(),
                                     std::vector<char>(g.vertex_count(), 0));
  for (const Edge& e : g.edges()) adj[e.a][e.b] = adj[e.b][e.a] = 1;
  return adj;
}

inline bool routes_with_branches(const MultiGraph& g,
                                 const std::vector<int>& branches,
                                 const std::vector<std::pair<int, int>>& pairs) {
  PathRouter router;
  router.n = g.vertex_count();
  router.adj = simple_adjacency(g);
  router.blocked.assign(router.n, 0);
  for (int b : branches) router.blocked[b] = 1;
  router.pairs = pairs;
  return router.route(0);
}

template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  if (k > n) return;
  for (;;) {
    fn(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace detail

inline bool has_k33_subdivision(const MultiGraph& g) {
  const int n = g.vertex_count();
  auto adj = detail::simple_adjacency(g);
  std::vector<int> candidates;
  for (int v = 0; v < n; ++v) {
    int deg = 0;
    for (int w = 0; w < n; ++w) deg += adj[v][w];
    if (deg >= 3) candidates.push_back(v);
  }
  if (candidates.size() < 6) return false;
  bool found = false;
  detail::for_each_combination(
      static_cast<int>(candidates.size()), 6, [&](const std::vector<int>& pick) {
        if (found) return;
        std::vector<int> six;
        for (int i : pick) six.push_back(candidates[i]);
        // All balanced bipartitions with six[0] on the first side.
        detail::for_each_combination(5, 2, [&](const std::vector<int>& rest) {
          if (found) return;
          std::vector<int> a = {six[0], six[1 + rest[0]], six[1 + rest[1]]};
          std::vector<int> b;
          for (int i = 1; i < 6; ++i)
            if (i != 1 + rest[0] && i != 1 + rest[1]) b.push_back(six[i]);
          std::vector<std::pair<int, int>> pairs;
          for (int x : a)
            for (int y : b) pairs.emplace_back(x, y);
          if (detail::routes_with_branches(g, six, pairs)) found = true;
        });
      });
  return found;
}

inline bool has_k5_subdivision(const MultiGraph& g) {
  const int n = g.vertex_count();
  auto adj = detail::simple_adjacency(g);
  std::vector<int> candidates;
  for (int v = 0; v < n; ++v) {
    int deg = 0;
    for (int w = 0; w < n; ++w) deg += adj[v][w];
    if (deg >= 4) candidates.push_back(v);
  }
  if (candidates.size() < 5) return false;
  bool found = false;
  detail::for_each_combination(
      static_cast<int>(candidates.size()), 5, [&](const std::vector<int>& pick) {
        if (found) return;
        std::vector<int> five;
        for (int i : pick) five.push_back(candidates[i]);
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 5; ++i)
          for (int j = i + 1; j < 5; ++j) pairs.emplace_back(five[i], five[j]);
        if (detail::routes_with_branches(g, five, pairs)) found = true;
      });
  return found;
}

// Kuratowski: planar iff no K5 and no K33 subdivision.
inline bool planar(const MultiGraph& g) {
  return !has_k5_subdivision(g) && !has_k33_subdivision(g);
}

// Exhaustive bipartition search over all 2^(n-1) assignments.
inline bool bipartite(const MultiGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    bool ok = true;
    auto side = [&](int v) { return v == 0 ? 0 : (mask >> (v - 1)) & 1; };
    for (const Edge& e : g.edges())
      if (side(e.a) == side(e.b)) ok = false;
    if (ok) return true;
  }
  return false;
}

// Exhaustive isomorphism search with degree pruning.
inline bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::vector<int>> ma(n, std::vector<int>(n, 0)), mb = ma;
  for (const Edge& e : a.edges()) ++ma[e.a][e.b], ++ma[e.b][e.a];
  for (const Edge& e : b.edges()) ++mb[e.a][e.b], ++mb[e.b][e.a];
  std::vector<int> map(n, -1);
  std::vector<char> taken(n, 0);
  auto deg = [&](const std::vector<std::vector<int>>& m, int v) {
    int d = 0;
    for (int w = 0; w < n; ++w) d += m[v][w];
    return d;
  };
  std::function<bool(int)> place = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (taken[w] || deg(ma, v) != deg(mb, w)) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (ma[v][u] != mb[w][map[u]]) ok = false;
      if (!ok) continue;
      map[v] = w;
      taken[w] = 1;
      if (place(v + 1)) return true;
      taken[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  return place(0);
}

// Every labeled loopless graph with all degrees 3 on n vertices (multiplicity
// cap 1 for simple, 3 otherwise), connected ones only.
inline std::vector<MultiGraph> all_connected_cubic(int n, bool simple) {
  std::vector<MultiGraph> out;
  if (n < 2 || n % 2 != 0) return out;
  std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
  std::vector<int> rem(n, 3);
  const int cap = simple ? 1 : 3;

  std::function<void(int, int)> fill = [&](int i, int j) {
    if (i == n - 1) {  // all cells decided
      bool done = true;
      for (int v = 0; v < n; ++v)
        if (rem[v] != 0) done = false;
      if (!done) return;
      std::vector<Edge> edges;
      for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
          for (int c = 0; c < mult[u][w]; ++c) edges.push_back({u, w});
      MultiGraph g(n, edges);
      if (g.is_connected()) out.push_back(std::move(g));
      return;
    }
    if (j == n) {
      if (rem[i] != 0) return;  // row i is finalized here
      fill(i + 1, i + 2);
      return;
    }
    int hi = std::min({cap, rem[i], rem[j]});
    for (int m = 0; m <= hi; ++m) {
      mult[i][j] = m;
      rem[i] -= m;
      rem[j] -= m;
      if (rem[i] >= 0 && rem[j] >= 0) fill(i, j + 1);
      rem[i] += m;
      rem[j] += m;
      mult[i][j] = 0;
    }
  };
  fill(0, 1);
  return out;
}

// Random relabeling of a multigraph: permuted vertices, shuffled edge order,
// randomly flipped endpoints.
inline MultiGraph relabel(const MultiGraph& g, std::mt19937_64& rng) {
  const int n = g.vertex_count();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Edge ne{perm[e.a], perm[e.b]};
    if (rng() & 1) std::swap(ne.a, ne.b);
    edges.push_back(ne);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return MultiGraph(n, edges);
}

}  // namespace kempe::oracle
