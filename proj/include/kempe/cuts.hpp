#pragma once

#include <vector>

#include "kempe/multigraph.hpp"

namespace kempe {

// A 2- or 3-edge cut: removing exactly these edges splits the graph into the
// two recorded sides, and every cut edge has one endpoint on each side.
struct EdgeCut {
  std::vector<int> edge_ids;  // sorted ascending
  std::vector<int> side_one;  // contains vertex 0
  std::vector<int> side_two;
  bool nontrivial = false;
};

// All edge cuts of the given size (2 or 3), by exhaustive enumeration over
// edge subsets, in lexicographic order of sorted edge ids. A 3-cut is
// nontrivial when both sides have at least 2 vertices; a 2-cut when its two
// edges share no endpoint. Requires a connected cubic graph.
std::vector<EdgeCut> find_edge_cuts(const MultiGraph& g, int size,
                                    bool nontrivial_only);

}  // namespace kempe
