#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kempe {

// Input/format problems (bad file, malformed graph text, bad plan string).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A resource guard tripped (state space too large, census order too high).
struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Edge {
  int a;
  int b;
};

// Labeled loopless multigraph. Edge ids are list positions and stay stable
// for the lifetime of the value; parallel edges are permitted, loops are not.
// Immutable after construction.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Edge ids incident to v, ascending.
  const std::vector<int>& incident_edges(int v) const { return incidence_[v]; }
  int degree(int v) const { return static_cast<int>(incidence_[v].size()); }
  int other_end(int edge_id, int v) const {
    const Edge& e = edges_[edge_id];
    return e.a == v ? e.b : e.a;
  }

  bool is_simple() const;
  bool is_connected() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

// True iff every vertex has degree exactly 3.
bool validate_cubic(const MultiGraph& g);

// Same vertex count and identical edge list (labels and ids both).
bool same_labeled_graph(const MultiGraph& a, const MultiGraph& b);

struct Bipartition {
  std::vector<int> side_a;  // side containing vertex 0
  std::vector<int> side_b;
};

// Two-coloring of the vertices with no monochromatic edge, if one exists.
// Deterministic: within each component the smallest vertex goes to side_a.
std::optional<Bipartition> is_bipartite(const MultiGraph& g);

// --- text formats ---------------------------------------------------------

// Multigraph text format: `vertices <n>`, then `edge <u> <v>` per edge in
// edge-id order; `#` starts a comment; blank lines ignored.
MultiGraph parse_graph_text(std::string_view text);
std::string to_graph_text(const MultiGraph& g);

// Standard graph6 (simple graphs only; edge ids in graph6 column order).
MultiGraph parse_graph6(std::string_view line);
std::string to_graph6(const MultiGraph& g);

// Accepts either format: a `vertices` directive selects the text format,
// anything else is treated as graph6.
MultiGraph parse_graph_auto(std::string_view text);

}  // namespace kempe
