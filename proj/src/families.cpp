#include "kempe/families.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "kempe/canonical.hpp"
#include "kempe/compose.hpp"
#include "kempe/cuts.hpp"
#include "kempe/kempe_classes.hpp"
#include "kempe/planarity.hpp"

namespace kempe {
namespace {

MultiGraph make_k33() {
  std::vector<Edge> edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) edges.push_back({i, j});
  return MultiGraph(6, edges);
}

MultiGraph make_k4() {
  return MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

MultiGraph make_theta() { return MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}}); }

MultiGraph make_moebius_ladder(int k) {
  if (k < 3) throw std::invalid_argument("moebius_ladder requires k >= 3");
  const int n = 2 * k;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (int i = 0; i < k; ++i) edges.push_back({i, i + k});
  return MultiGraph(n, edges);
}

MultiGraph make_prism(int k) {
  if (k < 3) throw std::invalid_argument("prism requires k >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
  for (int i = 0; i < k; ++i) edges.push_back({k + i, k + (i + 1) % k});
  for (int i = 0; i < k; ++i) edges.push_back({i, k + i});
  return MultiGraph(2 * k, edges);
}

MultiGraph make_crossed_prism(int k) {
  if (k < 2) throw std::invalid_argument("crossed_prism requires k >= 2");
  const int c = 2 * k;  // length of each cycle
  std::vector<Edge> edges;
  for (int i = 0; i < c; ++i) edges.push_back({i, (i + 1) % c});
  for (int i = 0; i < c; ++i) edges.push_back({c + i, c + (i + 1) % c});
  for (int i = 0; i < c; i += 2) {
    edges.push_back({i, c + (i + 1) % c});
    edges.push_back({(i + 1) % c, c + i});
  }
  return MultiGraph(2 * c, edges);
}

}  // namespace

MultiGraph y_power(const MultiGraph& base, int k) {
  if (k < 1) throw std::invalid_argument("y_power requires k >= 1");
  if (!validate_cubic(base)) throw std::invalid_argument("y_power base not cubic");
  MultiGraph acc = base;
  for (int i = 1; i < k; ++i)
    acc = y_compose(default_y_plan(acc, base)).graph;
  return acc;
}

MultiGraph generate(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::k33: return make_k33();
    case FamilyKind::k4: return make_k4();
    case FamilyKind::theta: return make_theta();
    case FamilyKind::moebius_ladder: return make_moebius_ladder(spec.k);
    case FamilyKind::prism: return make_prism(spec.k);
    case FamilyKind::crossed_prism: return make_crossed_prism(spec.k);
    case FamilyKind::y_power_k33: return y_power(make_k33(), spec.k);
    case FamilyKind::y_power_of:
      if (!spec.base) throw std::invalid_argument("y_power_of requires a base graph");
      return y_power(*spec.base, spec.k);
  }
  throw std::invalid_argument("unknown family kind");
}

std::optional<FamilyKind> family_kind_from_name(std::string_view name) {
  if (name == "k33") return FamilyKind::k33;
  if (name == "k4") return FamilyKind::k4;
  if (name == "theta") return FamilyKind::theta;
  if (name == "moebius_ladder" || name == "ml") return FamilyKind::moebius_ladder;
  if (name == "prism" || name == "pr") return FamilyKind::prism;
  if (name == "crossed_prism" || name == "cpr") return FamilyKind::crossed_prism;
  if (name == "y_power_k33") return FamilyKind::y_power_k33;
  if (name == "y_power_of") return FamilyKind::y_power_of;
  return std::nullopt;
}

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::k33: return "k33";
    case FamilyKind::k4: return "k4";
    case FamilyKind::theta: return "theta";
    case FamilyKind::moebius_ladder: return "moebius_ladder";
    case FamilyKind::prism: return "prism";
    case FamilyKind::crossed_prism: return "crossed_prism";
    case FamilyKind::y_power_k33: return "y_power_k33";
    case FamilyKind::y_power_of: return "y_power_of";
  }
  return "?";
}

// --- census ----------------------------------------------------------------

namespace {

// Subdivide edges e and f (possibly the same edge) and join the two new
// vertices. This is the inverse of deleting an edge and smoothing its
// endpoints; iterating it from the base cases generates connected cubic
// graphs two vertices at a time.
MultiGraph insert_edge_pair(const MultiGraph& g, int e, int f) {
  const int a = g.vertex_count();
  const int b = a + 1;
  std::vector<Edge> edges;
  for (int id = 0; id < g.edge_count(); ++id)
    if (id != e && id != f) edges.push_back(g.edge(id));
  if (e == f) {
    const Edge& ee = g.edge(e);
    edges.push_back({ee.a, a});
    edges.push_back({a, b});
    edges.push_back({b, ee.b});
    edges.push_back({a, b});
  } else {
    const Edge& ee = g.edge(e);
    const Edge& ff = g.edge(f);
    edges.push_back({ee.a, a});
    edges.push_back({a, ee.b});
    edges.push_back({ff.a, b});
    edges.push_back({b, ff.b});
    edges.push_back({a, b});
  }
  return MultiGraph(a + 2, std::move(edges));
}

// Subdivide one edge in each of two graphs and join the new vertices by a
// bridge. Needed to reach the bridged multigraphs, which single-graph edge
// insertion cannot produce.
MultiGraph bridge_join(const MultiGraph& g1, const MultiGraph& g2, int e1, int e2) {
  const int n1 = g1.vertex_count();
  const int a = n1 + g2.vertex_count();
  const int b = a + 1;
  std::vector<Edge> edges;
  for (int id = 0; id < g1.edge_count(); ++id)
    if (id != e1) edges.push_back(g1.edge(id));
  for (int id = 0; id < g2.edge_count(); ++id)
    if (id != e2) edges.push_back({g2.edge(id).a + n1, g2.edge(id).b + n1});
  const Edge& x = g1.edge(e1);
  const Edge& y = g2.edge(e2);
  edges.push_back({x.a, a});
  edges.push_back({a, x.b});
  edges.push_back({y.a + n1, b});
  edges.push_back({b, y.b + n1});
  edges.push_back({a, b});
  return MultiGraph(b + 1, std::move(edges));
}

struct Level {
  std::vector<MultiGraph> graphs;                 // sorted by canonical code
  std::vector<std::vector<uint8_t>> codes;        // aligned
};

Level dedup_level(std::vector<MultiGraph> candidates) {
  std::map<std::vector<uint8_t>, MultiGraph> by_code;
  for (MultiGraph& g : candidates) by_code.emplace(canonical_form(g), std::move(g));
  Level level;
  for (auto& [code, g] : by_code) {
    level.codes.push_back(code);
    level.graphs.push_back(std::move(g));
  }
  return level;
}

const Level& multi_level(int n);

// Connected cubic simple graphs on exactly n vertices. Deleting any
// non-bridge edge of a simple cubic graph and smoothing its endpoints leaves
// a connected cubic multigraph (simpleness rules out the loop case), so
// inserting into the full multigraph level below and keeping the simple
// results is exhaustive.
const Level& simple_level(int n) {
  static std::map<int, Level> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  Level level;
  if (n >= 4 && n % 2 == 0) {
    const Level& prev = multi_level(n - 2);
    std::vector<MultiGraph> candidates;
    for (const MultiGraph& g : prev.graphs)
      for (int e = 0; e < g.edge_count(); ++e)
        for (int f = e + 1; f < g.edge_count(); ++f) {
          MultiGraph candidate = insert_edge_pair(g, e, f);
          if (candidate.is_simple()) candidates.push_back(std::move(candidate));
        }
    level = dedup_level(std::move(candidates));
  }
  return cache.emplace(n, std::move(level)).first->second;
}

// Connected cubic loopless multigraphs on exactly n vertices: edge insertion
// (same-edge insertion allowed) plus bridge joins of smaller levels.
const Level& multi_level(int n) {
  static std::map<int, Level> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  Level level;
  if (n == 2) {
    level = dedup_level({make_theta()});
  } else if (n >= 4 && n % 2 == 0) {
    std::vector<MultiGraph> candidates;
    const Level& prev = multi_level(n - 2);
    for (const MultiGraph& g : prev.graphs)
      for (int e = 0; e < g.edge_count(); ++e)
        for (int f = e; f < g.edge_count(); ++f)
          candidates.push_back(insert_edge_pair(g, e, f));
    for (int n1 = 2; n1 <= n - 2 - n1; n1 += 2) {
      const Level& left = multi_level(n1);
      const Level& right = multi_level(n - 2 - n1);
      for (const MultiGraph& g1 : left.graphs)
        for (const MultiGraph& g2 : right.graphs)
          for (int e1 = 0; e1 < g1.edge_count(); ++e1)
            for (int e2 = 0; e2 < g2.edge_count(); ++e2)
              candidates.push_back(bridge_join(g1, g2, e1, e2));
    }
    level = dedup_level(std::move(candidates));
  }
  return cache.emplace(n, std::move(level)).first->second;
}

bool passes(const MultiGraph& g, const CensusFilters& filters) {
  if (filters.simple && !g.is_simple()) return false;
  if (filters.bipartite && *filters.bipartite != is_bipartite(g).has_value())
    return false;
  if (filters.planar && *filters.planar != is_planar(g)) return false;
  return true;
}

}  // namespace

std::vector<MultiGraph> census_at(int n, const CensusFilters& filters) {
  if (n > kCensusMaxOrder)
    throw guard_error("census order capped at " + std::to_string(kCensusMaxOrder));
  if (n < 2 || n % 2 != 0) return {};
  const Level& level = filters.simple ? simple_level(n) : multi_level(n);
  std::vector<MultiGraph> out;
  for (const MultiGraph& g : level.graphs)
    if (passes(g, filters)) out.push_back(g);
  return out;
}

std::vector<MultiGraph> census(int max_n, const CensusFilters& filters) {
  if (max_n > kCensusMaxOrder)
    throw guard_error("census order capped at " + std::to_string(kCensusMaxOrder));
  std::vector<MultiGraph> out;
  for (int n = 2; n <= max_n; n += 2) {
    std::vector<MultiGraph> level = census_at(n, filters);
    for (MultiGraph& g : level) out.push_back(std::move(g));
  }
  return out;
}

bool is_three_connected_cubic(const MultiGraph& g) {
  if (!validate_cubic(g) || !g.is_connected()) return false;
  for (int id = 0; id < g.edge_count(); ++id) {
    std::vector<Edge> rest;
    for (int j = 0; j < g.edge_count(); ++j)
      if (j != id) rest.push_back(g.edge(j));
    if (!MultiGraph(g.vertex_count(), rest).is_connected()) return false;  // bridge
  }
  return find_edge_cuts(g, 2, /*nontrivial_only=*/true).empty();
}

std::vector<MultiGraph> search_one_class(int n, const OneClassRequire& require) {
  CensusFilters filters;
  filters.simple = require.simple;
  if (require.bipartite) filters.bipartite = true;
  if (require.nonplanar) filters.planar = false;
  std::vector<MultiGraph> out;
  for (const MultiGraph& g : census_at(n, filters)) {
    if (require.three_connected && !is_three_connected_cubic(g)) continue;
    if (count_classes(g, 3).class_count == 1) out.push_back(g);
  }
  return out;
}

std::vector<SpectrumEntry> kprime_spectrum(int max_n, const CensusFilters& filters,
                                           int jobs) {
  std::vector<MultiGraph> graphs = census(max_n, filters);
  std::vector<long long> kprime(graphs.size(), 0);
  if (jobs <= 1 || graphs.size() < 2) {
    for (size_t i = 0; i < graphs.size(); ++i)
      kprime[i] = count_classes(graphs[i], 3).class_count;
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= graphs.size()) return;
        kprime[i] = count_classes(graphs[i], 3).class_count;
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  // Census order is (order, canonical code), so a sequential merge picks the
  // first witness deterministically regardless of scheduling.
  std::map<long long, SpectrumEntry> first_witness;
  for (size_t i = 0; i < graphs.size(); ++i) {
    if (kprime[i] == 0) continue;  // not 3-edge-colorable
    if (!first_witness.count(kprime[i]))
      first_witness[kprime[i]] =
          SpectrumEntry{kprime[i], graphs[i].vertex_count(), graphs[i]};
  }
  std::vector<SpectrumEntry> out;
  for (auto& [k, entry] : first_witness) out.push_back(std::move(entry));
  return out;
}

}  // namespace kempe
