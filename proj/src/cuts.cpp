#include "kempe/cuts.hpp"

#include <numeric>

namespace kempe {
namespace {

// Component labels of g with the given edges removed; returns component count.
int components_without(const MultiGraph& g, const std::vector<int>& removed,
                       std::vector<int>& label) {
  const int n = g.vertex_count();
  label.assign(n, -1);
  auto is_removed = [&](int id) {
    for (int r : removed)
      if (r == id) return true;
    return false;
  };
  int comp = 0;
  for (int root = 0; root < n; ++root) {
    if (label[root] != -1) continue;
    label[root] = comp;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int id : g.incident_edges(v)) {
        if (is_removed(id)) continue;
        int w = g.other_end(id, v);
        if (label[w] == -1) {
          label[w] = comp;
          stack.push_back(w);
        }
      }
    }
    ++comp;
  }
  return comp;
}

// Builds the cut record if `ids` is a genuine full-boundary cut, else nullopt.
std::optional<EdgeCut> make_cut(const MultiGraph& g, std::vector<int> ids) {
  std::vector<int> label;
  if (components_without(g, ids, label) != 2) return std::nullopt;
  const int side_of_zero = label[0];
  for (int id : ids) {
    const Edge& e = g.edge(id);
    if (label[e.a] == label[e.b]) return std::nullopt;  // not a boundary edge
  }
  EdgeCut cut;
  cut.edge_ids = std::move(ids);
  for (int v = 0; v < g.vertex_count(); ++v)
    (label[v] == side_of_zero ? cut.side_one : cut.side_two).push_back(v);
  if (cut.edge_ids.size() == 3) {
    cut.nontrivial = cut.side_one.size() >= 2 && cut.side_two.size() >= 2;
  } else {
    const Edge& e0 = g.edge(cut.edge_ids[0]);
    const Edge& e1 = g.edge(cut.edge_ids[1]);
    cut.nontrivial = e0.a != e1.a && e0.a != e1.b && e0.b != e1.a && e0.b != e1.b;
  }
  return cut;
}

}  // namespace

std::vector<EdgeCut> find_edge_cuts(const MultiGraph& g, int size,
                                    bool nontrivial_only) {
  if (size != 2 && size != 3) throw std::invalid_argument("cut size must be 2 or 3");
  if (!validate_cubic(g)) throw std::invalid_argument("find_edge_cuts: graph not cubic");
  if (!g.is_connected())
    throw std::invalid_argument("find_edge_cuts: graph not connected");

  const int m = g.edge_count();
  std::vector<EdgeCut> cuts;
  if (size == 2) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (auto cut = make_cut(g, {i, j}))
          if (!nontrivial_only || cut->nontrivial) cuts.push_back(std::move(*cut));
  } else {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (int k = j + 1; k < m; ++k)
          if (auto cut = make_cut(g, {i, j, k}))
            if (!nontrivial_only || cut->nontrivial) cuts.push_back(std::move(*cut));
  }
  return cuts;
}

}  // namespace kempe
