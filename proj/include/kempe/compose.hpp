#pragma once

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "kempe/coloring.hpp"
#include "kempe/cuts.hpp"
#include "kempe/multigraph.hpp"

namespace kempe {

// Where a composed (or split) edge came from: side 1 or 2 with the original
// edge id, or side 0 for an edge created by the operation (index = slot).
struct EdgeOrigin {
  int side = 0;
  int index = 0;
};

// Gluing plan over a 3-edge cut: delete v1 and v2 and identify their
// incident edges pairwise. x_edges are the edges at v1 in ascending id
// order; y_edges[i] is the edge at v2 identified with x_edges[i].
struct YPlan {
  MultiGraph g1, g2;
  int v1 = 0, v2 = 0;
  std::array<int, 3> x_edges{};
  std::array<int, 3> y_edges{};
};

// Gluing plan over a 2-edge cut: delete edge x from g1 and y from g2, then
// join endpoints. With x=(a1,b1) and y=(a2,b2) as stored, straight pairing
// adds (a1,a2),(b1,b2); crossed adds (a1,b2),(b1,a2).
struct HPlan {
  MultiGraph g1, g2;
  int x_edge = 0, y_edge = 0;
  bool crossed = false;
};

YPlan make_y_plan(MultiGraph g1, MultiGraph g2, int v1, int v2,
                  const std::array<int, 3>& y_for_x);
YPlan default_y_plan(MultiGraph g1, MultiGraph g2);
HPlan default_h_plan(MultiGraph g1, MultiGraph g2);

struct YComposition {
  YPlan plan;
  MultiGraph graph;
  std::vector<EdgeOrigin> origin;  // per composed edge
  std::vector<int> vmap1, vmap2;   // original vertex -> composed vertex (-1 at v1/v2)
};

struct HComposition {
  HPlan plan;
  MultiGraph graph;
  std::vector<EdgeOrigin> origin;
  std::vector<int> vmap1, vmap2;
};

YComposition y_compose(const YPlan& plan);
HComposition h_compose(const HPlan& plan);

// Splitting a graph over a cut, with the plan that recomposes it. The apex
// vertex of each Y piece is its last vertex; the replacement edge of each H
// piece is its last edge.
struct YSplit {
  EdgeCut cut;
  MultiGraph piece1, piece2;
  std::vector<EdgeOrigin> origin1, origin2;  // per piece edge; side 0 slot k = cut edge k
  YPlan plan;
};

struct HSplit {
  EdgeCut cut;
  MultiGraph piece1, piece2;
  std::vector<EdgeOrigin> origin1, origin2;
  HPlan plan;
};

YSplit y_split(const MultiGraph& g, const EdgeCut& cut);
HSplit h_split(const MultiGraph& g, const EdgeCut& cut);

// Coloring transfer along a composition: the unique color permutation
// aligning d with c across the cut is applied to the g2 side.
EdgeColoring color_compose(const YComposition& comp, const EdgeColoring& c,
                           const EdgeColoring& d);
EdgeColoring color_compose(const HComposition& comp, const EdgeColoring& c,
                           const EdgeColoring& d);

// Coloring restriction along a split; the new edges inherit the cut colors.
std::pair<EdgeColoring, EdgeColoring> color_split(const YSplit& split,
                                                  const EdgeColoring& f);
std::pair<EdgeColoring, EdgeColoring> color_split(const HSplit& split,
                                                  const EdgeColoring& f);

// Recursive splitting along nontrivial 2-edge cuts until none remain; the
// leaves are 3-connected (theta graphs or simple graphs).
struct DecompositionNode {
  MultiGraph graph;
  std::vector<uint8_t> canonical;
  bool leaf = true;
  EdgeCut cut;  // meaningful when !leaf
  std::unique_ptr<DecompositionNode> child1, child2;
};

struct DecompositionTree {
  std::unique_ptr<DecompositionNode> root;
  std::vector<const DecompositionNode*> leaves() const;
};

DecompositionTree decompose_to_3connected(const MultiGraph& g);
std::string decomposition_tree_json(const DecompositionTree& tree);

// Independent check of the class-product law for one composition: recounts
// K' on both pieces and on the composite, and checks that composing class
// representatives pairwise hits every composite class exactly once.
struct MultiplicativityReport {
  long long k1 = 0, k2 = 0, k_composed = 0;
  bool product_ok = false;
  bool bijection_ok = false;
  std::string detail;
  bool passed() const { return product_ok && bijection_ok; }
};

MultiplicativityReport verify_multiplicativity(const YPlan& plan);
MultiplicativityReport verify_multiplicativity(const HPlan& plan);

// Plan text formats:
//   y <v1> <v2> <x1>:<y1> <x2>:<y2> <x3>:<y3>   (edge ids)
//   h <x> <y> <s11>:<s21> <s12>:<s22>           (edge ids, then vertex pairs)
YPlan parse_y_plan(MultiGraph g1, MultiGraph g2, std::string_view text);
HPlan parse_h_plan(MultiGraph g1, MultiGraph g2, std::string_view text);
std::string to_plan_text(const YPlan& plan);
std::string to_plan_text(const HPlan& plan);

}  // namespace kempe
