#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "kempe/cuts.hpp"
#include "kempe/multigraph.hpp"

namespace kempe {

using Color = uint8_t;

// Proper edge coloring of a multigraph. Value object; `graph` is a non-owning
// pointer to the (immutable) graph it colors, which must outlive the coloring.
struct EdgeColoring {
  const MultiGraph* graph = nullptr;
  int palette = 0;                // colors are 0..palette-1
  std::vector<Color> colors;      // indexed by edge id

  bool operator==(const EdgeColoring& o) const {
    return graph == o.graph && palette == o.palette && colors == o.colors;
  }
};

bool is_proper(const EdgeColoring& c);

// Maximal connected two-colored edge set through a seed edge. In a cubic
// graph under a proper 3-edge-coloring this is always an even cycle.
struct KempeChain {
  std::array<Color, 2> color_pair;  // ascending
  std::vector<int> edge_ids;        // starts at the seed
  bool cycle = false;
};

struct Switch {
  std::array<Color, 2> color_pair;  // ascending
  int seed_edge = -1;               // chain identity: any edge of the chain
};

// All proper edge colorings with the given palette, in lexicographic order of
// color vectors (backtracking over edges in id order, colors ascending).
// With fix_vertex, the colors of its incident edges are pinned to 0,1,2,...
// in edge-id order.
std::vector<EdgeColoring> enumerate_colorings(
    const MultiGraph& g, int palette,
    std::optional<int> fix_vertex = std::nullopt);

// Internal-scale variant: stops with guard_error once `cap` colorings exist.
std::vector<EdgeColoring> enumerate_colorings_capped(
    const MultiGraph& g, int palette, std::optional<int> fix_vertex, size_t cap);

KempeChain kempe_chain(const EdgeColoring& c, std::array<Color, 2> pair,
                       int seed_edge);

// The disjoint chains covering every edge colored within the pair, ordered by
// smallest contained edge id.
std::vector<KempeChain> all_chains(const EdgeColoring& c,
                                   std::array<Color, 2> pair);

// Exchange the pair's colors along the chain; the input is not modified.
// The chain overload rejects a stale chain (one that is not a chain of c).
EdgeColoring apply_switch(const EdgeColoring& c, const KempeChain& chain);
EdgeColoring apply_switch(const EdgeColoring& c, const Switch& s);

// Colors on the cut edges, sorted. Checks the parity facts for proper
// 3-edge-colorings of cubic graphs: a 2-edge cut is monochromatic and a
// 3-edge cut is rainbow; a violation is an internal-consistency failure.
std::vector<Color> cut_color_check(const EdgeColoring& c, const EdgeCut& cut);

// True iff no edge of the chain touches vertex v.
bool chain_avoids_vertex(const MultiGraph& g, const KempeChain& chain, int v);

// --- text formats ---------------------------------------------------------

// Single line of edge colors in edge-id order.
EdgeColoring parse_coloring_text(const MultiGraph& g, int palette,
                                 std::string_view text);
std::string to_coloring_text(const EdgeColoring& c);

// {"n": <palette>, "colors": [...]}
std::string coloring_json(const EdgeColoring& c);

}  // namespace kempe
