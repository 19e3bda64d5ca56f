#include "kempe/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>

namespace kempe {

bool is_proper(const EdgeColoring& c) {
  const MultiGraph& g = *c.graph;
  if (static_cast<int>(c.colors.size()) != g.edge_count()) return false;
  for (Color col : c.colors)
    if (col >= c.palette) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    unsigned seen = 0;
    for (int id : g.incident_edges(v)) {
      unsigned bit = 1u << c.colors[id];
      if (seen & bit) return false;
      seen |= bit;
    }
  }
  return true;
}

namespace {

void backtrack(const MultiGraph& g, int palette, const std::vector<int>& pin,
               std::vector<Color>& colors, std::vector<unsigned>& used, int edge,
               std::vector<EdgeColoring>& out, size_t cap) {
  if (edge == g.edge_count()) {
    if (out.size() >= cap)
      throw guard_error("coloring enumeration exceeded guard of " +
                        std::to_string(cap) + " colorings");
    out.push_back(EdgeColoring{&g, palette, colors});
    return;
  }
  const Edge& e = g.edge(edge);
  int lo = 0, hi = palette;
  if (pin[edge] >= 0) {
    lo = pin[edge];
    hi = pin[edge] + 1;
    if (lo >= palette) return;
  }
  for (int c = lo; c < hi; ++c) {
    unsigned bit = 1u << c;
    if ((used[e.a] | used[e.b]) & bit) continue;
    colors[edge] = static_cast<Color>(c);
    used[e.a] |= bit;
    used[e.b] |= bit;
    backtrack(g, palette, pin, colors, used, edge + 1, out, cap);
    used[e.a] &= ~bit;
    used[e.b] &= ~bit;
  }
}

}  // namespace

std::vector<EdgeColoring> enumerate_colorings_capped(const MultiGraph& g,
                                                     int palette,
                                                     std::optional<int> fix_vertex,
                                                     size_t cap) {
  if (palette < 1 || palette > 30)
    throw std::invalid_argument("palette size out of range");
  std::vector<int> pin(g.edge_count(), -1);
  if (fix_vertex) {
    int v = *fix_vertex;
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("fix_vertex out of range");
    int next = 0;
    for (int id : g.incident_edges(v)) pin[id] = next++;
  }
  std::vector<EdgeColoring> out;
  std::vector<Color> colors(g.edge_count(), 0);
  std::vector<unsigned> used(g.vertex_count(), 0);
  backtrack(g, palette, pin, colors, used, 0, out, cap);
  return out;
}

std::vector<EdgeColoring> enumerate_colorings(const MultiGraph& g, int palette,
                                              std::optional<int> fix_vertex) {
  return enumerate_colorings_capped(g, palette, fix_vertex,
                                    std::numeric_limits<size_t>::max());
}

namespace {

// The other pair-colored edge at vertex v, or -1. Properness bounds the
// pair-colored edges at any vertex by two.
int next_pair_edge(const EdgeColoring& c, std::array<Color, 2> pair, int v,
                   int arriving_edge) {
  for (int id : c.graph->incident_edges(v)) {
    if (id == arriving_edge) continue;
    if (c.colors[id] == pair[0] || c.colors[id] == pair[1]) return id;
  }
  return -1;
}

}  // namespace

KempeChain kempe_chain(const EdgeColoring& c, std::array<Color, 2> pair,
                       int seed_edge) {
  if (pair[0] > pair[1]) std::swap(pair[0], pair[1]);
  if (pair[0] == pair[1] || pair[1] >= c.palette)
    throw std::invalid_argument("bad color pair");
  if (seed_edge < 0 || seed_edge >= c.graph->edge_count())
    throw std::invalid_argument("seed edge out of range");
  if (c.colors[seed_edge] != pair[0] && c.colors[seed_edge] != pair[1])
    throw std::invalid_argument("seed edge color not in pair");

  const MultiGraph& g = *c.graph;
  KempeChain chain;
  chain.color_pair = pair;
  chain.edge_ids.push_back(seed_edge);

  const Edge& seed = g.edge(seed_edge);
  const int first_v = std::min(seed.a, seed.b);
  const int second_v = std::max(seed.a, seed.b);

  // Walk from the seed toward its lower endpoint; a closed walk is a cycle.
  int cur_v = first_v;
  int cur_e = seed_edge;
  for (;;) {
    int nxt = next_pair_edge(c, pair, cur_v, cur_e);
    if (nxt == -1) break;
    if (nxt == seed_edge) {
      chain.cycle = true;
      break;
    }
    chain.edge_ids.push_back(nxt);
    cur_v = g.other_end(nxt, cur_v);
    cur_e = nxt;
  }
  if (!chain.cycle) {  // open chain: continue from the seed's other endpoint
    cur_v = second_v;
    cur_e = seed_edge;
    for (;;) {
      int nxt = next_pair_edge(c, pair, cur_v, cur_e);
      if (nxt == -1) break;
      chain.edge_ids.push_back(nxt);
      cur_v = g.other_end(nxt, cur_v);
      cur_e = nxt;
    }
  }

  if (validate_cubic(g) && c.palette == 3) {
    if (!chain.cycle || chain.edge_ids.size() % 2 != 0)
      throw std::logic_error(
          "internal: chain of a 3-edge-colored cubic graph is not an even cycle");
  }
  return chain;
}

std::vector<KempeChain> all_chains(const EdgeColoring& c,
                                   std::array<Color, 2> pair) {
  if (pair[0] > pair[1]) std::swap(pair[0], pair[1]);
  std::vector<char> seen(c.graph->edge_count(), 0);
  std::vector<KempeChain> chains;
  for (int id = 0; id < c.graph->edge_count(); ++id) {
    if (seen[id]) continue;
    if (c.colors[id] != pair[0] && c.colors[id] != pair[1]) continue;
    chains.push_back(kempe_chain(c, pair, id));
    for (int e : chains.back().edge_ids) seen[e] = 1;
  }
  return chains;
}

EdgeColoring apply_switch(const EdgeColoring& c, const KempeChain& chain) {
  if (chain.edge_ids.empty()) throw std::invalid_argument("empty chain");
  KempeChain fresh = kempe_chain(c, chain.color_pair, chain.edge_ids.front());
  std::vector<int> a = fresh.edge_ids, b = chain.edge_ids;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw std::invalid_argument("stale chain: not a chain of this coloring");
  EdgeColoring out = c;
  for (int id : fresh.edge_ids)
    out.colors[id] = out.colors[id] == chain.color_pair[0] ? chain.color_pair[1]
                                                           : chain.color_pair[0];
  assert(is_proper(out));
  return out;
}

EdgeColoring apply_switch(const EdgeColoring& c, const Switch& s) {
  KempeChain chain = kempe_chain(c, s.color_pair, s.seed_edge);
  EdgeColoring out = c;
  for (int id : chain.edge_ids)
    out.colors[id] =
        out.colors[id] == chain.color_pair[0] ? chain.color_pair[1] : chain.color_pair[0];
  assert(is_proper(out));
  return out;
}

std::vector<Color> cut_color_check(const EdgeColoring& c, const EdgeCut& cut) {
  std::vector<Color> on_cut;
  for (int id : cut.edge_ids) on_cut.push_back(c.colors[id]);
  std::sort(on_cut.begin(), on_cut.end());
  if (on_cut.size() == 2) {
    if (on_cut[0] != on_cut[1])
      throw std::logic_error("internal: 2-edge cut not monochromatic");
  } else if (on_cut.size() == 3) {
    if (on_cut[0] == on_cut[1] || on_cut[1] == on_cut[2])
      throw std::logic_error("internal: 3-edge cut not rainbow");
  }
  return on_cut;
}

bool chain_avoids_vertex(const MultiGraph& g, const KempeChain& chain, int v) {
  for (int id : chain.edge_ids) {
    const Edge& e = g.edge(id);
    if (e.a == v || e.b == v) return false;
  }
  return true;
}

EdgeColoring parse_coloring_text(const MultiGraph& g, int palette,
                                 std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Color> colors;
  long long value;
  while (in >> value) {
    if (value < 0 || value >= palette)
      throw parse_error("coloring value " + std::to_string(value) +
                        " outside palette");
    colors.push_back(static_cast<Color>(value));
  }
  if (static_cast<int>(colors.size()) != g.edge_count())
    throw parse_error("coloring has " + std::to_string(colors.size()) +
                      " entries, graph has " + std::to_string(g.edge_count()) +
                      " edges");
  EdgeColoring c{&g, palette, std::move(colors)};
  if (!is_proper(c)) throw parse_error("coloring is not proper");
  return c;
}

std::string to_coloring_text(const EdgeColoring& c) {
  std::ostringstream out;
  for (size_t i = 0; i < c.colors.size(); ++i) {
    if (i) out << ' ';
    out << static_cast<int>(c.colors[i]);
  }
  return out.str();
}

std::string coloring_json(const EdgeColoring& c) {
  std::ostringstream out;
  out << "{\"n\": " << c.palette << ", \"colors\": [";
  for (size_t i = 0; i < c.colors.size(); ++i) {
    if (i) out << ", ";
    out << static_cast<int>(c.colors[i]);
  }
  out << "]}";
  return out.str();
}

}  // namespace kempe
