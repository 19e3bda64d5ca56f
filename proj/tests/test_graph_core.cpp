#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "kempe/canonical.hpp"
#include "kempe/cuts.hpp"
#include "kempe/families.hpp"
#include "kempe/multigraph.hpp"
#include "kempe/planarity.hpp"
#include "oracles.hpp"

using namespace kempe;

namespace {

MultiGraph theta() { return generate({FamilyKind::theta}); }
MultiGraph k33() { return generate({FamilyKind::k33}); }
MultiGraph k4() { return generate({FamilyKind::k4}); }
MultiGraph prism(int k) { return generate({FamilyKind::prism, k}); }
MultiGraph ml(int k) { return generate({FamilyKind::moebius_ladder, k}); }

MultiGraph theta_h_theta() {
  // two digon pairs joined by two bridge-pair edges
  return MultiGraph(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}});
}

MultiGraph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) edges.push_back({i, (i + 1) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back({5 + i, 5 + (i + 2) % 5});
  for (int i = 0; i < 5; ++i) edges.push_back({i, 5 + i});
  return MultiGraph(10, edges);
}

MultiGraph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return MultiGraph(n, edges);
}

}  // namespace

TEST_CASE("multigraph construction enforces the invariants") {
  CHECK_THROWS_AS(MultiGraph(2, {{0, 0}}), std::invalid_argument);  // loop
  CHECK_THROWS_AS(MultiGraph(2, {{0, 5}}), std::invalid_argument);  // range
  MultiGraph g = theta();
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(0) == 3);
  CHECK(g.incident_edges(0) == std::vector<int>{0, 1, 2});
}

TEST_CASE("validate_cubic") {
  CHECK(validate_cubic(theta()));
  CHECK(validate_cubic(k33()));
  CHECK_FALSE(validate_cubic(MultiGraph(2, {{0, 1}})));
}

TEST_CASE("is_bipartite on the named graphs") {
  auto bp = is_bipartite(k33());
  REQUIRE(bp.has_value());
  CHECK(bp->side_a.size() == 3);
  CHECK(bp->side_b.size() == 3);
  CHECK(bp->side_a.front() == 0);
  CHECK_FALSE(is_bipartite(prism(3)).has_value());  // triangles
}

TEST_CASE("moebius ladders are bipartite exactly for odd k") {
  for (int k = 3; k <= 8; ++k) {
    MultiGraph g = ml(k);
    bool expected = oracle::bipartite(g);
    CHECK(is_bipartite(g).has_value() == expected);
    CHECK(expected == (k % 2 == 1));
  }
}

TEST_CASE("is_planar on the named graphs") {
  for (int k = 3; k <= 8; ++k) CHECK(is_planar(prism(k)));
  CHECK_FALSE(is_planar(k33()));
  CHECK(is_planar(k4()));
  CHECK(is_planar(complete(4)));
  CHECK_FALSE(is_planar(complete(5)));
  CHECK_FALSE(is_planar(complete(6)));
  CHECK_FALSE(is_planar(petersen()));
  CHECK(is_planar(theta()));
  CHECK(is_planar(theta_h_theta()));
  for (int k = 3; k <= 8; ++k) CHECK_FALSE(is_planar(ml(k)));
}

TEST_CASE("is_planar and is_bipartite agree with the brute-force oracles") {
  CensusFilters multi;
  multi.simple = false;
  std::vector<MultiGraph> graphs = census(8);
  for (const MultiGraph& g : census(6, multi)) graphs.push_back(g);
  graphs.push_back(petersen());
  graphs.push_back(complete(5));
  graphs.push_back(complete(6));
  for (int k = 2; k <= 4; ++k)
    graphs.push_back(generate({FamilyKind::crossed_prism, k}));
  for (const MultiGraph& g : graphs) {
    CAPTURE(to_graph_text(g));
    CHECK(is_planar(g) == oracle::planar(g));
    CHECK(is_bipartite(g).has_value() == oracle::bipartite(g));
  }
}

TEST_CASE("is_planar matches the oracle on the order-10 census") {
  for (const MultiGraph& g : census_at(10)) {
    CAPTURE(to_graph6(g));
    CHECK(is_planar(g) == oracle::planar(g));
  }
}

TEST_CASE("is_planar matches the oracle on the order-12 bipartite census") {
  CensusFilters bip;
  bip.bipartite = true;
  for (const MultiGraph& g : census_at(12, bip)) {
    CAPTURE(to_graph6(g));
    CHECK(is_planar(g) == oracle::planar(g));
  }
}

TEST_CASE("randomized general multigraphs: planarity and canonical vs oracles") {
  std::mt19937_64 rng(314159);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    int m = n < 2 ? 0 : static_cast<int>(rng() % (2 * n + 4));
    std::vector<Edge> edges;
    for (int e = 0; e < m; ++e) {
      int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
      if (a != b) edges.push_back({a, b});
    }
    MultiGraph g(n, edges);
    CAPTURE(to_graph_text(g));
    CHECK(is_planar(g) == oracle::planar(g));
    MultiGraph h = oracle::relabel(g, rng);
    CHECK(canonical_form(g) == canonical_form(h));
  }
}

TEST_CASE("find_edge_cuts: prism rung cut") {
  MultiGraph g = prism(3);
  auto cuts = find_edge_cuts(g, 3, true);
  // the rungs are edges 6,7,8 and separate the two triangles
  bool found = false;
  for (const EdgeCut& cut : cuts)
    if (cut.edge_ids == std::vector<int>{6, 7, 8}) {
      found = true;
      CHECK(cut.side_one.size() == 3);
      CHECK(cut.side_two.size() == 3);
      CHECK(cut.nontrivial);
    }
  CHECK(found);
}

TEST_CASE("find_edge_cuts: K33 has no nontrivial 3-cut") {
  CHECK(find_edge_cuts(k33(), 3, true).empty());
}

TEST_CASE("find_edge_cuts: theta-H-theta has exactly one nontrivial 2-cut") {
  auto cuts = find_edge_cuts(theta_h_theta(), 2, true);
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0].edge_ids == std::vector<int>{4, 5});
}

TEST_CASE("every vertex star is a trivial 3-cut when the rest stays connected") {
  for (const MultiGraph& g : {k33(), k4(), prism(4)}) {
    auto cuts = find_edge_cuts(g, 3, false);
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::vector<int> star = g.incident_edges(v);
      bool found = false;
      for (const EdgeCut& cut : cuts)
        if (cut.edge_ids == star) {
          found = true;
          CHECK_FALSE(cut.nontrivial);
          CHECK((cut.side_one.size() == 1 || cut.side_two.size() == 1));
        }
      CHECK(found);
    }
  }
}

TEST_CASE("cut sides really are the components left by removing the cut") {
  for (const MultiGraph& g : {prism(3), prism(4), k33(), theta_h_theta()}) {
    for (int size : {2, 3}) {
      for (const EdgeCut& cut : find_edge_cuts(g, size, false)) {
        std::vector<Edge> rest;
        for (int id = 0; id < g.edge_count(); ++id) {
          bool in_cut = std::find(cut.edge_ids.begin(), cut.edge_ids.end(), id) !=
                        cut.edge_ids.end();
          if (!in_cut) rest.push_back(g.edge(id));
        }
        MultiGraph pruned(g.vertex_count(), rest);
        // both sides are internally connected and mutually separated
        std::vector<int> side_of(g.vertex_count(), -1);
        for (int v : cut.side_one) side_of[v] = 0;
        for (int v : cut.side_two) side_of[v] = 1;
        for (const Edge& e : rest) CHECK(side_of[e.a] == side_of[e.b]);
        for (int id : cut.edge_ids) {
          const Edge& e = g.edge(id);
          CHECK(side_of[e.a] != side_of[e.b]);
        }
        CHECK_FALSE(pruned.is_connected());
      }
    }
  }
}

TEST_CASE("canonical_form is invariant under relabeling") {
  std::mt19937_64 rng(20240901);
  std::vector<MultiGraph> graphs = {theta(), theta_h_theta(), k33(), k4(),
                                    prism(4), ml(5), petersen()};
  for (const MultiGraph& g : graphs) {
    auto code = canonical_form(g);
    for (int trial = 0; trial < 20; ++trial) {
      MultiGraph h = oracle::relabel(g, rng);
      CHECK(canonical_form(h) == code);
    }
  }
}

TEST_CASE("canonical_form separates non-isomorphic graphs (oracle check)") {
  std::vector<MultiGraph> graphs = census(8);
  for (const MultiGraph& g : census(6, CensusFilters{false, {}, {}}))
    graphs.push_back(g);
  for (size_t i = 0; i < graphs.size(); ++i) {
    for (size_t j = i + 1; j < graphs.size(); ++j) {
      bool same_code = canonical_form(graphs[i]) == canonical_form(graphs[j]);
      CHECK(same_code == oracle::isomorphic(graphs[i], graphs[j]));
    }
  }
}

TEST_CASE("ML_3 is K33; theta differs from the 2-vertex digon") {
  CHECK(isomorphic(ml(3), k33()));
  CHECK(oracle::isomorphic(ml(3), k33()));
  MultiGraph digon(2, {{0, 1}, {0, 1}});
  CHECK(canonical_form(theta()) != canonical_form(digon));
}

TEST_CASE("graph text format round trip and errors") {
  MultiGraph g = theta_h_theta();
  MultiGraph h = parse_graph_text(to_graph_text(g));
  CHECK(h.vertex_count() == g.vertex_count());
  REQUIRE(h.edge_count() == g.edge_count());
  for (int id = 0; id < g.edge_count(); ++id) {
    CHECK(h.edge(id).a == g.edge(id).a);
    CHECK(h.edge(id).b == g.edge(id).b);
  }
  CHECK_THROWS_AS(parse_graph_text("edge 0 1\n"), parse_error);
  CHECK_THROWS_AS(parse_graph_text("vertices 2\nedge 0 0\n"), parse_error);
  CHECK_THROWS_AS(parse_graph_text("vertices 2\nfoo\n"), parse_error);
  MultiGraph commented = parse_graph_text(
      "# a comment\nvertices 2\n\nedge 0 1 # trailing\nedge 0 1\nedge 0 1\n");
  CHECK(commented.edge_count() == 3);
}

TEST_CASE("graph6 round trip on the simple census") {
  for (const MultiGraph& g : census(8)) {
    MultiGraph h = parse_graph6(to_graph6(g));
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.edge_count() == g.edge_count());
    CHECK(isomorphic(g, h));
    // column order is deterministic: same adjacency set
    auto key = [](const MultiGraph& x) {
      std::vector<std::pair<int, int>> s;
      for (const Edge& e : x.edges())
        s.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
      std::sort(s.begin(), s.end());
      return s;
    };
    CHECK(key(g) == key(h));
  }
  CHECK_THROWS_AS(to_graph6(theta()), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6(""), parse_error);
}

TEST_CASE("parse_graph_auto accepts both formats") {
  MultiGraph a = parse_graph_auto("vertices 2\nedge 0 1\nedge 0 1\nedge 0 1\n");
  CHECK(a.edge_count() == 3);
  MultiGraph b = parse_graph_auto(to_graph6(k33()) + "\n");
  CHECK(b.vertex_count() == 6);
  CHECK(isomorphic(b, k33()));
}
