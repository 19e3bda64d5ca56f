#include "kempe/kempe_classes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace kempe {

EdgeColoring SwitchSequence::replay() const {
  EdgeColoring cur = start;
  for (const Switch& s : steps) cur = apply_switch(cur, s);
  return cur;
}

int KempeStateSpace::index_of(const std::vector<Color>& colors) const {
  auto it = std::lower_bound(colorings.begin(), colorings.end(), colors);
  if (it == colorings.end() || *it != colors) return -1;
  return static_cast<int>(it - colorings.begin());
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<std::array<Color, 2>> color_pairs(int palette) {
  std::vector<std::array<Color, 2>> pairs;
  for (Color p = 0; p < palette; ++p)
    for (Color q = p + 1; q < palette; ++q) pairs.push_back({p, q});
  return pairs;
}

}  // namespace

KempeStateSpace build_state_space(const MultiGraph& g, int palette,
                                  ClassMethod method) {
  KempeStateSpace space;
  space.graph = &g;
  space.palette = palette;
  space.method = method;

  std::optional<int> fix;
  if (method == ClassMethod::fixed_vertex) fix = 0;
  std::vector<EdgeColoring> list =
      enumerate_colorings_capped(g, palette, fix, kStateSpaceGuard);
  space.colorings.reserve(list.size());
  for (EdgeColoring& c : list) space.colorings.push_back(std::move(c.colors));
  // index_of binary-searches this list, so it must stay sorted; the
  // backtracking order already is lexicographic.
  std::sort(space.colorings.begin(), space.colorings.end());

  const int count = static_cast<int>(space.colorings.size());
  UnionFind uf(count);
  const auto pairs = color_pairs(palette);
  for (int i = 0; i < count; ++i) {
    EdgeColoring c{&g, palette, space.colorings[i]};
    for (const auto& pair : pairs) {
      for (const KempeChain& chain : all_chains(c, pair)) {
        if (method == ClassMethod::fixed_vertex && !chain_avoids_vertex(g, chain, 0))
          continue;
        EdgeColoring d = apply_switch(c, chain);
        int j = space.index_of(d.colors);
        if (j < 0)
          throw std::logic_error("internal: switch left the enumerated state space");
        uf.unite(i, j);
      }
    }
  }

  space.class_of.assign(count, -1);
  std::map<int, int> root_to_class;
  for (int i = 0; i < count; ++i) {
    int r = uf.find(i);
    auto [it, inserted] = root_to_class.emplace(r, space.class_count);
    if (inserted) ++space.class_count;
    space.class_of[i] = it->second;
  }
  return space;
}

ClassReport count_classes(const MultiGraph& g, int palette, ClassMethod method) {
  KempeStateSpace space = build_state_space(g, palette, method);
  ClassReport report;
  report.palette = palette;
  report.method = method;
  report.coloring_count = static_cast<long long>(space.colorings.size());
  report.class_count = space.class_count;
  report.representatives.assign(space.class_count, {});
  report.class_sizes.assign(space.class_count, 0);
  std::vector<char> seen(space.class_count, 0);
  for (size_t i = 0; i < space.colorings.size(); ++i) {
    int cls = space.class_of[i];
    if (!seen[cls]) {  // first in lex order = class representative
      seen[cls] = 1;
      report.representatives[cls] = space.colorings[i];
    }
    ++report.class_sizes[cls];
  }
  return report;
}

std::optional<SwitchSequence> are_equivalent(const EdgeColoring& c,
                                             const EdgeColoring& d) {
  if (c.palette != d.palette ||
      (c.graph != d.graph && !same_labeled_graph(*c.graph, *d.graph)))
    throw std::invalid_argument("colorings of different graphs or palettes");
  if (c.colors == d.colors) return SwitchSequence{c, {}};

  const auto pairs = color_pairs(c.palette);
  std::map<std::vector<Color>, std::pair<std::vector<Color>, Switch>> parent;
  std::vector<std::vector<Color>> frontier = {c.colors};
  parent.emplace(c.colors, std::make_pair(std::vector<Color>{}, Switch{}));

  while (!frontier.empty()) {
    std::vector<std::vector<Color>> next;
    for (const auto& cur : frontier) {
      EdgeColoring cc{c.graph, c.palette, cur};
      for (const auto& pair : pairs) {
        for (const KempeChain& chain : all_chains(cc, pair)) {
          EdgeColoring nb = apply_switch(cc, chain);
          if (parent.count(nb.colors)) continue;
          Switch s{pair, *std::min_element(chain.edge_ids.begin(), chain.edge_ids.end())};
          parent.emplace(nb.colors, std::make_pair(cur, s));
          if (nb.colors == d.colors) {
            SwitchSequence seq{c, {}};
            std::vector<Color> at = d.colors;
            while (at != c.colors) {
              auto& [prev, step] = parent.at(at);
              seq.steps.push_back(step);
              at = prev;
            }
            std::reverse(seq.steps.begin(), seq.steps.end());
            return seq;
          }
          next.push_back(nb.colors);
        }
      }
      if (parent.size() > kStateSpaceGuard)
        throw guard_error("equivalence search exceeded state guard");
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

namespace {

int chain_min_edge(const KempeChain& chain) {
  return *std::min_element(chain.edge_ids.begin(), chain.edge_ids.end());
}

// Transposition factors realizing perm left-to-right (first factor applied
// first): a cycle (a1 a2 ... ak) becomes (a1 a2), (a1 a3), ..., (a1 ak).
std::vector<std::array<Color, 2>> transposition_factors(
    const std::vector<Color>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> done(n, 0);
  std::vector<std::array<Color, 2>> factors;
  for (int start = 0; start < n; ++start) {
    if (done[start] || perm[start] == start) continue;
    std::vector<Color> cycle = {static_cast<Color>(start)};
    done[start] = 1;
    for (Color at = perm[start]; at != start; at = perm[at]) {
      cycle.push_back(at);
      done[at] = 1;
    }
    for (size_t i = 1; i < cycle.size(); ++i) {
      Color a = cycle[0], b = cycle[i];
      factors.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  return factors;
}

}  // namespace

SwitchSequence permute_colors_via_switches(const EdgeColoring& c,
                                           const std::vector<Color>& perm) {
  if (static_cast<int>(perm.size()) != c.palette)
    throw std::invalid_argument("permutation size does not match palette");
  {
    std::vector<char> hit(c.palette, 0);
    for (Color p : perm) {
      if (p >= c.palette || hit[p]) throw std::invalid_argument("not a permutation");
      hit[p] = 1;
    }
  }
  SwitchSequence seq{c, {}};
  EdgeColoring cur = c;
  for (const auto& pair : transposition_factors(perm)) {
    // Switching every chain of the pair swaps the two colors globally; the
    // chain edge sets do not change while we work through them.
    for (const KempeChain& chain : all_chains(cur, pair)) {
      Switch s{pair, chain_min_edge(chain)};
      seq.steps.push_back(s);
      cur = apply_switch(cur, s);
    }
  }
  // The factorization is exact; verify pointwise.
  for (size_t e = 0; e < cur.colors.size(); ++e)
    if (cur.colors[e] != perm[c.colors[e]])
      throw std::logic_error("internal: permutation factorization mismatch");
  return seq;
}

SwitchSequence normalize_switch_sequence(const SwitchSequence& seq, int v) {
  const EdgeColoring& c = seq.start;
  const MultiGraph& g = *c.graph;
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
  const EdgeColoring d = seq.replay();
  for (int id : g.incident_edges(v))
    if (c.colors[id] != d.colors[id])
      throw std::invalid_argument(
          "endpoint colorings differ on an edge incident to the fixed vertex");

  const int n = c.palette;
  std::vector<Color> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);

  SwitchSequence out{c, {}};
  EdgeColoring original = c;    // o_i: replay of the input sequence
  EdgeColoring rewritten = c;   // sigma_i applied to o_i, by induction

  for (const Switch& s : seq.steps) {
    KempeChain chain = kempe_chain(original, s.color_pair, s.seed_edge);
    const std::array<Color, 2> mapped = {
        std::min(sigma[s.color_pair[0]], sigma[s.color_pair[1]]),
        std::max(sigma[s.color_pair[0]], sigma[s.color_pair[1]])};
    if (chain_avoids_vertex(g, chain, v)) {
      Switch t{mapped, chain_min_edge(chain)};
      out.steps.push_back(t);
      rewritten = apply_switch(rewritten, t);
    } else {
      const int through_v = chain_min_edge(chain);
      for (const KempeChain& other : all_chains(original, s.color_pair)) {
        if (chain_min_edge(other) == through_v) continue;
        Switch t{mapped, chain_min_edge(other)};
        out.steps.push_back(t);
        rewritten = apply_switch(rewritten, t);
      }
      // sigma <- sigma . pi, with pi the step's transposition.
      std::swap(sigma[s.color_pair[0]], sigma[s.color_pair[1]]);
    }
    original = apply_switch(original, s);
  }

  for (size_t e = 0; e < rewritten.colors.size(); ++e)
    if (rewritten.colors[e] != sigma[original.colors[e]])
      throw std::logic_error("internal: normalization invariant broken");

  bool identity = true;
  for (int i = 0; i < n; ++i)
    if (sigma[i] != i) identity = false;

  if (!identity) {
    if (n <= g.degree(v) + 1)
      throw std::logic_error(
          "internal: residual permutation should be the identity");
    // The residual permutation only moves colors absent at v; undo it with
    // global switches, whose chains cannot touch v.
    std::vector<Color> inverse(n);
    for (int i = 0; i < n; ++i) inverse[sigma[i]] = static_cast<Color>(i);
    SwitchSequence fix = permute_colors_via_switches(rewritten, inverse);
    EdgeColoring cur = rewritten;
    for (const Switch& s : fix.steps) {
      KempeChain chain = kempe_chain(cur, s.color_pair, s.seed_edge);
      if (!chain_avoids_vertex(g, chain, v))
        throw std::logic_error("internal: residual fix-up touched the fixed vertex");
      out.steps.push_back(s);
      cur = apply_switch(cur, s);
    }
    rewritten = cur;
  }

  if (rewritten.colors != d.colors)
    throw std::logic_error("internal: normalized sequence missed its endpoint");
  return out;
}

SwitchSequence random_sequence_fixed_at(const MultiGraph& g, int v, int steps,
                                        uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<EdgeColoring> all = enumerate_colorings(g, 3);
  if (all.empty()) throw std::invalid_argument("graph has no proper 3-edge-coloring");
  SwitchSequence seq{all[rng() % all.size()], {}};
  EdgeColoring cur = seq.start;
  const auto pairs = color_pairs(3);
  for (int i = 0; i < steps; ++i) {
    const auto& pair = pairs[rng() % pairs.size()];
    auto chains = all_chains(cur, pair);
    if (chains.empty()) continue;
    const KempeChain& chain = chains[rng() % chains.size()];
    Switch s{pair, chain_min_edge(chain)};
    seq.steps.push_back(s);
    cur = apply_switch(cur, s);
  }
  // Restore the colors at v with a global permutation; both triples at v are
  // rainbow, so the permutation is unique.
  std::vector<Color> perm(3);
  bool moved = false;
  for (int id : g.incident_edges(v)) {
    perm[cur.colors[id]] = seq.start.colors[id];
    if (cur.colors[id] != seq.start.colors[id]) moved = true;
  }
  if (moved) {
    SwitchSequence fix = permute_colors_via_switches(cur, perm);
    for (const Switch& s : fix.steps) seq.steps.push_back(s);
  }
  return seq;
}

std::string export_kempe_graph(const MultiGraph& g, int palette) {
  KempeStateSpace space = build_state_space(g, palette, ClassMethod::fixed_vertex);
  std::ostringstream dot;
  dot << "graph kempe {\n";
  for (size_t i = 0; i < space.colorings.size(); ++i) {
    dot << "  c" << i << " [label=\"";
    const auto& colors = space.colorings[i];
    for (size_t e = 0; e < colors.size(); ++e) {
      if (e) dot << ' ';
      dot << static_cast<int>(colors[e]);
    }
    dot << "\"];\n";
  }
  const auto pairs = [&] {
    std::vector<std::array<Color, 2>> p;
    for (Color a = 0; a < palette; ++a)
      for (Color b = a + 1; b < palette; ++b) p.push_back({a, b});
    return p;
  }();
  for (size_t i = 0; i < space.colorings.size(); ++i) {
    EdgeColoring c{&g, palette, space.colorings[i]};
    for (const auto& pair : pairs) {
      for (const KempeChain& chain : all_chains(c, pair)) {
        if (!chain_avoids_vertex(g, chain, 0)) continue;
        EdgeColoring d = apply_switch(c, chain);
        int j = space.index_of(d.colors);
        if (j > static_cast<int>(i)) dot << "  c" << i << " -- c" << j << ";\n";
      }
    }
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace kempe
