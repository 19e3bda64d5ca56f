#include "kempe/compose.hpp"

#include <algorithm>
#include <sstream>

#include "kempe/canonical.hpp"
#include "kempe/kempe_classes.hpp"

#include "json.hpp"

namespace kempe {
namespace {

void require_cubic(const MultiGraph& g, const char* who) {
  if (!validate_cubic(g))
    throw std::invalid_argument(std::string(who) + ": graph not cubic");
}

std::array<int, 3> edges_at(const MultiGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count() || g.degree(v) != 3)
    throw std::invalid_argument("vertex does not have degree 3");
  const auto& inc = g.incident_edges(v);
  return {inc[0], inc[1], inc[2]};
}

// True when `cut` is a genuine full-boundary cut of g with the recorded sides.
bool cut_matches_graph(const MultiGraph& g, const EdgeCut& cut) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int v : cut.side_one) {
    if (v < 0 || v >= n) return false;
    side[v] = 0;
  }
  for (int v : cut.side_two) {
    if (v < 0 || v >= n || side[v] != -1) return false;
    side[v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (side[v] == -1) return false;
  std::vector<char> in_cut(g.edge_count(), 0);
  for (int id : cut.edge_ids) {
    if (id < 0 || id >= g.edge_count()) return false;
    in_cut[id] = 1;
    const Edge& e = g.edge(id);
    if (side[e.a] == side[e.b]) return false;
  }
  for (int id = 0; id < g.edge_count(); ++id) {
    if (in_cut[id]) continue;
    const Edge& e = g.edge(id);
    if (side[e.a] != side[e.b]) return false;
  }
  return true;
}

// Plans hold copies of the input graphs, so match on structure, not identity.
void require_proper3(const EdgeColoring& c, const MultiGraph& expected,
                     const char* who) {
  if (!c.graph || !same_labeled_graph(*c.graph, expected))
    throw std::invalid_argument(std::string(who) + ": coloring of the wrong graph");
  if (c.palette != 3)
    throw std::invalid_argument(std::string(who) + ": palette must be 3");
  EdgeColoring view{&expected, c.palette, c.colors};
  if (!is_proper(view))
    throw std::invalid_argument(std::string(who) + ": coloring not proper");
}

void assert_proper(const EdgeColoring& c, const char* who) {
  if (!is_proper(c))
    throw std::logic_error(std::string("internal: ") + who +
                           " produced an improper coloring");
}

}  // namespace

YPlan make_y_plan(MultiGraph g1, MultiGraph g2, int v1, int v2,
                  const std::array<int, 3>& y_for_x) {
  require_cubic(g1, "make_y_plan");
  require_cubic(g2, "make_y_plan");
  YPlan plan;
  plan.x_edges = edges_at(g1, v1);
  auto ye = edges_at(g2, v2);
  std::array<int, 3> sorted_y = y_for_x;
  std::sort(sorted_y.begin(), sorted_y.end());
  if (!std::equal(sorted_y.begin(), sorted_y.end(), ye.begin()))
    throw std::invalid_argument("make_y_plan: correspondence is not the edges at v2");
  plan.g1 = std::move(g1);
  plan.g2 = std::move(g2);
  plan.v1 = v1;
  plan.v2 = v2;
  plan.y_edges = y_for_x;
  return plan;
}

YPlan default_y_plan(MultiGraph g1, MultiGraph g2) {
  auto ye = edges_at(g2, 0);
  return make_y_plan(std::move(g1), std::move(g2), 0, 0, ye);
}

HPlan default_h_plan(MultiGraph g1, MultiGraph g2) {
  require_cubic(g1, "default_h_plan");
  require_cubic(g2, "default_h_plan");
  if (g1.edge_count() == 0 || g2.edge_count() == 0)
    throw std::invalid_argument("default_h_plan: graph has no edges");
  HPlan plan;
  plan.g1 = std::move(g1);
  plan.g2 = std::move(g2);
  return plan;
}

YComposition y_compose(const YPlan& plan) {
  require_cubic(plan.g1, "y_compose");
  require_cubic(plan.g2, "y_compose");
  const MultiGraph& g1 = plan.g1;
  const MultiGraph& g2 = plan.g2;
  auto x_check = edges_at(g1, plan.v1);
  if (x_check != plan.x_edges)
    throw std::invalid_argument("y_compose: x_edges are not the edges at v1");
  {
    auto ye = edges_at(g2, plan.v2);
    std::array<int, 3> sorted_y = plan.y_edges;
    std::sort(sorted_y.begin(), sorted_y.end());
    if (!std::equal(sorted_y.begin(), sorted_y.end(), ye.begin()))
      throw std::invalid_argument("y_compose: y_edges are not the edges at v2");
  }

  YComposition comp;
  comp.plan = plan;
  comp.vmap1.assign(g1.vertex_count(), -1);
  comp.vmap2.assign(g2.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g1.vertex_count(); ++v)
    if (v != plan.v1) comp.vmap1[v] = next++;
  for (int v = 0; v < g2.vertex_count(); ++v)
    if (v != plan.v2) comp.vmap2[v] = next++;

  std::vector<Edge> edges;
  auto is_x = [&](int id) {
    return id == plan.x_edges[0] || id == plan.x_edges[1] || id == plan.x_edges[2];
  };
  auto is_y = [&](int id) {
    return id == plan.y_edges[0] || id == plan.y_edges[1] || id == plan.y_edges[2];
  };
  for (int id = 0; id < g1.edge_count(); ++id) {
    if (is_x(id)) continue;
    const Edge& e = g1.edge(id);
    edges.push_back({comp.vmap1[e.a], comp.vmap1[e.b]});
    comp.origin.push_back({1, id});
  }
  for (int id = 0; id < g2.edge_count(); ++id) {
    if (is_y(id)) continue;
    const Edge& e = g2.edge(id);
    edges.push_back({comp.vmap2[e.a], comp.vmap2[e.b]});
    comp.origin.push_back({2, id});
  }
  for (int slot = 0; slot < 3; ++slot) {
    int sx = g1.other_end(plan.x_edges[slot], plan.v1);
    int sy = g2.other_end(plan.y_edges[slot], plan.v2);
    edges.push_back({comp.vmap1[sx], comp.vmap2[sy]});
    comp.origin.push_back({0, slot});
  }
  comp.graph = MultiGraph(next, std::move(edges));
  if (!validate_cubic(comp.graph))
    throw std::logic_error("internal: y_compose result not cubic");
  return comp;
}

HComposition h_compose(const HPlan& plan) {
  require_cubic(plan.g1, "h_compose");
  require_cubic(plan.g2, "h_compose");
  const MultiGraph& g1 = plan.g1;
  const MultiGraph& g2 = plan.g2;
  if (plan.x_edge < 0 || plan.x_edge >= g1.edge_count() || plan.y_edge < 0 ||
      plan.y_edge >= g2.edge_count())
    throw std::invalid_argument("h_compose: designated edge absent");

  HComposition comp;
  comp.plan = plan;
  const int n1 = g1.vertex_count();
  comp.vmap1.resize(n1);
  for (int v = 0; v < n1; ++v) comp.vmap1[v] = v;
  comp.vmap2.resize(g2.vertex_count());
  for (int v = 0; v < g2.vertex_count(); ++v) comp.vmap2[v] = n1 + v;

  std::vector<Edge> edges;
  for (int id = 0; id < g1.edge_count(); ++id) {
    if (id == plan.x_edge) continue;
    edges.push_back(g1.edge(id));
    comp.origin.push_back({1, id});
  }
  for (int id = 0; id < g2.edge_count(); ++id) {
    if (id == plan.y_edge) continue;
    const Edge& e = g2.edge(id);
    edges.push_back({comp.vmap2[e.a], comp.vmap2[e.b]});
    comp.origin.push_back({2, id});
  }
  const Edge x = g1.edge(plan.x_edge);
  const Edge y = g2.edge(plan.y_edge);
  const int a2 = comp.vmap2[plan.crossed ? y.b : y.a];
  const int b2 = comp.vmap2[plan.crossed ? y.a : y.b];
  edges.push_back({x.a, a2});
  comp.origin.push_back({0, 0});
  edges.push_back({x.b, b2});
  comp.origin.push_back({0, 1});
  comp.graph = MultiGraph(n1 + g2.vertex_count(), std::move(edges));
  if (!validate_cubic(comp.graph))
    throw std::logic_error("internal: h_compose result not cubic");
  return comp;
}

namespace {

// Builds one side of a Y split: the induced subgraph plus an apex vertex
// joined to the cut endpoints, in cut order.
void build_y_piece(const MultiGraph& g, const EdgeCut& cut,
                   const std::vector<int>& side_vertices, MultiGraph& piece,
                   std::vector<EdgeOrigin>& origin, std::vector<int>& vmap) {
  vmap.assign(g.vertex_count(), -1);
  int next = 0;
  for (int v : side_vertices) vmap[v] = next++;
  const int apex = next;
  std::vector<Edge> edges;
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (vmap[e.a] != -1 && vmap[e.b] != -1 &&
        std::find(cut.edge_ids.begin(), cut.edge_ids.end(), id) == cut.edge_ids.end()) {
      edges.push_back({vmap[e.a], vmap[e.b]});
      origin.push_back({1, id});
    }
  }
  for (size_t slot = 0; slot < cut.edge_ids.size(); ++slot) {
    const Edge& e = g.edge(cut.edge_ids[slot]);
    int s = vmap[e.a] != -1 ? e.a : e.b;
    edges.push_back({apex, vmap[s]});
    origin.push_back({0, static_cast<int>(slot)});
  }
  piece = MultiGraph(next + 1, std::move(edges));
}

}  // namespace

YSplit y_split(const MultiGraph& g, const EdgeCut& cut) {
  require_cubic(g, "y_split");
  if (cut.edge_ids.size() != 3 || !cut_matches_graph(g, cut))
    throw std::invalid_argument("y_split: not a valid 3-edge cut of this graph");

  YSplit split;
  split.cut = cut;
  std::vector<int> vmap;
  build_y_piece(g, cut, cut.side_one, split.piece1, split.origin1, vmap);
  build_y_piece(g, cut, cut.side_two, split.piece2, split.origin2, vmap);
  if (!validate_cubic(split.piece1) || !validate_cubic(split.piece2))
    throw std::logic_error("internal: y_split piece not cubic");

  const int apex1 = split.piece1.vertex_count() - 1;
  const int apex2 = split.piece2.vertex_count() - 1;
  split.plan = make_y_plan(split.piece1, split.piece2, apex1, apex2,
                           edges_at(split.piece2, apex2));
  return split;
}

HSplit h_split(const MultiGraph& g, const EdgeCut& cut) {
  require_cubic(g, "h_split");
  if (cut.edge_ids.size() != 2 || !cut_matches_graph(g, cut))
    throw std::invalid_argument("h_split: not a valid 2-edge cut of this graph");
  if (!cut.nontrivial)
    throw std::invalid_argument("h_split: cut edges share a vertex");

  HSplit split;
  split.cut = cut;
  const Edge& lo = g.edge(cut.edge_ids[0]);
  const Edge& hi = g.edge(cut.edge_ids[1]);
  std::vector<char> in_one(g.vertex_count(), 0);
  for (int v : cut.side_one) in_one[v] = 1;
  const int s11 = in_one[lo.a] ? lo.a : lo.b;
  const int s21 = in_one[lo.a] ? lo.b : lo.a;
  const int s12 = in_one[hi.a] ? hi.a : hi.b;
  const int s22 = in_one[hi.a] ? hi.b : hi.a;

  auto build = [&](const std::vector<int>& side, int u, int w, MultiGraph& piece,
                   std::vector<EdgeOrigin>& origin) {
    std::vector<int> vmap(g.vertex_count(), -1);
    int next = 0;
    for (int v : side) vmap[v] = next++;
    std::vector<Edge> edges;
    for (int id = 0; id < g.edge_count(); ++id) {
      if (id == cut.edge_ids[0] || id == cut.edge_ids[1]) continue;
      const Edge& e = g.edge(id);
      if (vmap[e.a] != -1 && vmap[e.b] != -1) {
        edges.push_back({vmap[e.a], vmap[e.b]});
        origin.push_back({1, id});
      }
    }
    edges.push_back({vmap[u], vmap[w]});
    origin.push_back({0, 0});
    piece = MultiGraph(next, std::move(edges));
  };
  build(cut.side_one, s11, s12, split.piece1, split.origin1);
  build(cut.side_two, s21, s22, split.piece2, split.origin2);
  if (!validate_cubic(split.piece1) || !validate_cubic(split.piece2))
    throw std::logic_error("internal: h_split piece not cubic");

  split.plan.g1 = split.piece1;
  split.plan.g2 = split.piece2;
  split.plan.x_edge = split.piece1.edge_count() - 1;
  split.plan.y_edge = split.piece2.edge_count() - 1;
  split.plan.crossed = false;
  return split;
}

EdgeColoring color_compose(const YComposition& comp, const EdgeColoring& c,
                           const EdgeColoring& d) {
  require_proper3(c, comp.plan.g1, "color_compose");
  require_proper3(d, comp.plan.g2, "color_compose");
  std::array<Color, 3> cx{}, dy{};
  for (int slot = 0; slot < 3; ++slot) {
    cx[slot] = c.colors[comp.plan.x_edges[slot]];
    dy[slot] = d.colors[comp.plan.y_edges[slot]];
  }
  // Both triples are rainbow (properness at v1 and v2), so rho is a bijection.
  std::array<Color, 3> rho{};
  for (int slot = 0; slot < 3; ++slot) rho[dy[slot]] = cx[slot];

  EdgeColoring out{&comp.graph, 3, std::vector<Color>(comp.graph.edge_count(), 0)};
  for (int id = 0; id < comp.graph.edge_count(); ++id) {
    const EdgeOrigin& o = comp.origin[id];
    if (o.side == 1) out.colors[id] = c.colors[o.index];
    else if (o.side == 2) out.colors[id] = rho[d.colors[o.index]];
    else out.colors[id] = cx[o.index];
  }
  assert_proper(out, "color_compose(Y)");
  return out;
}

EdgeColoring color_compose(const HComposition& comp, const EdgeColoring& c,
                           const EdgeColoring& d) {
  require_proper3(c, comp.plan.g1, "color_compose");
  require_proper3(d, comp.plan.g2, "color_compose");
  const Color cx = c.colors[comp.plan.x_edge];
  const Color dyy = d.colors[comp.plan.y_edge];
  auto tau = [&](Color col) {
    if (col == cx) return dyy;
    if (col == dyy) return cx;
    return col;
  };
  EdgeColoring out{&comp.graph, 3, std::vector<Color>(comp.graph.edge_count(), 0)};
  for (int id = 0; id < comp.graph.edge_count(); ++id) {
    const EdgeOrigin& o = comp.origin[id];
    if (o.side == 1) out.colors[id] = c.colors[o.index];
    else if (o.side == 2) out.colors[id] = tau(d.colors[o.index]);
    else out.colors[id] = cx;
  }
  assert_proper(out, "color_compose(H)");
  return out;
}

std::pair<EdgeColoring, EdgeColoring> color_split(const YSplit& split,
                                                  const EdgeColoring& f) {
  if (f.palette != 3 || !is_proper(f))
    throw std::invalid_argument("color_split: need a proper 3-edge-coloring");
  EdgeColoring check{f.graph, 3, f.colors};
  cut_color_check(check, split.cut);  // rainbow by the parity facts

  auto restrict_to = [&](const MultiGraph& piece,
                         const std::vector<EdgeOrigin>& origin) {
    EdgeColoring out{&piece, 3, std::vector<Color>(piece.edge_count(), 0)};
    for (int id = 0; id < piece.edge_count(); ++id) {
      const EdgeOrigin& o = origin[id];
      out.colors[id] =
          o.side == 1 ? f.colors[o.index] : f.colors[split.cut.edge_ids[o.index]];
    }
    assert_proper(out, "color_split(Y)");
    return out;
  };
  return {restrict_to(split.piece1, split.origin1),
          restrict_to(split.piece2, split.origin2)};
}

std::pair<EdgeColoring, EdgeColoring> color_split(const HSplit& split,
                                                  const EdgeColoring& f) {
  if (f.palette != 3 || !is_proper(f))
    throw std::invalid_argument("color_split: need a proper 3-edge-coloring");
  EdgeColoring check{f.graph, 3, f.colors};
  cut_color_check(check, split.cut);  // monochromatic by the parity facts

  auto restrict_to = [&](const MultiGraph& piece,
                         const std::vector<EdgeOrigin>& origin) {
    EdgeColoring out{&piece, 3, std::vector<Color>(piece.edge_count(), 0)};
    for (int id = 0; id < piece.edge_count(); ++id) {
      const EdgeOrigin& o = origin[id];
      out.colors[id] =
          o.side == 1 ? f.colors[o.index] : f.colors[split.cut.edge_ids[0]];
    }
    assert_proper(out, "color_split(H)");
    return out;
  };
  return {restrict_to(split.piece1, split.origin1),
          restrict_to(split.piece2, split.origin2)};
}

namespace {

std::unique_ptr<DecompositionNode> decompose_node(const MultiGraph& g) {
  auto node = std::make_unique<DecompositionNode>();
  node->graph = g;
  node->canonical = canonical_form(g);
  auto cuts = find_edge_cuts(g, 2, /*nontrivial_only=*/true);
  if (cuts.empty()) return node;  // 3-connected leaf
  node->leaf = false;
  node->cut = cuts.front();  // lexicographically least
  HSplit split = h_split(g, node->cut);
  node->child1 = decompose_node(split.piece1);
  node->child2 = decompose_node(split.piece2);
  return node;
}

}  // namespace

std::vector<const DecompositionNode*> DecompositionTree::leaves() const {
  std::vector<const DecompositionNode*> out;
  std::vector<const DecompositionNode*> stack = {root.get()};
  while (!stack.empty()) {
    const DecompositionNode* node = stack.back();
    stack.pop_back();
    if (!node) continue;
    if (node->leaf) out.push_back(node);
    else {
      stack.push_back(node->child2.get());
      stack.push_back(node->child1.get());
    }
  }
  return out;
}

DecompositionTree decompose_to_3connected(const MultiGraph& g) {
  require_cubic(g, "decompose_to_3connected");
  if (!g.is_connected())
    throw std::invalid_argument("decompose_to_3connected: graph not connected");
  // A bridge makes the graph 3-edge-uncolorable and the calculus inapplicable.
  for (int id = 0; id < g.edge_count(); ++id) {
    std::vector<Edge> rest;
    for (int j = 0; j < g.edge_count(); ++j)
      if (j != id) rest.push_back(g.edge(j));
    if (!MultiGraph(g.vertex_count(), rest).is_connected())
      throw std::invalid_argument(
          "decompose_to_3connected: bridge found (edge " + std::to_string(id) +
          "); graph is not 2-connected");
  }
  DecompositionTree tree;
  tree.root = decompose_node(g);
  return tree;
}

namespace {

nlohmann::json node_json(const DecompositionNode& node) {
  nlohmann::json j;
  j["vertices"] = node.graph.vertex_count();
  j["edges"] = node.graph.edge_count();
  if (node.leaf) {
    j["leaf"] = true;
    j["three_connected"] = true;  // certified: no nontrivial 2-edge cut remains
    std::string hex;
    static const char* digits = "0123456789abcdef";
    for (uint8_t b : node.canonical) {
      hex.push_back(digits[b >> 4]);
      hex.push_back(digits[b & 15]);
    }
    j["canonical"] = hex;
    j["graph"] = to_graph_text(node.graph);
  } else {
    j["leaf"] = false;
    j["cut"] = node.cut.edge_ids;
    j["children"] = nlohmann::json::array(
        {node_json(*node.child1), node_json(*node.child2)});
  }
  return j;
}

}  // namespace

std::string decomposition_tree_json(const DecompositionTree& tree) {
  return node_json(*tree.root).dump(2);
}

namespace {

template <typename Composition>
MultiplicativityReport verify_impl(const Composition& comp) {
  MultiplicativityReport rep;
  ClassReport r1 = count_classes(comp.plan.g1, 3, ClassMethod::fixed_vertex);
  ClassReport r2 = count_classes(comp.plan.g2, 3, ClassMethod::fixed_vertex);
  KempeStateSpace space = build_state_space(comp.graph, 3, ClassMethod::raw);
  rep.k1 = r1.class_count;
  rep.k2 = r2.class_count;
  rep.k_composed = space.class_count;
  rep.product_ok = rep.k_composed == rep.k1 * rep.k2;

  std::vector<int> hit_classes;
  bool ok = true;
  for (const auto& rc : r1.representatives) {
    for (const auto& rd : r2.representatives) {
      EdgeColoring c{&comp.plan.g1, 3, rc};
      EdgeColoring d{&comp.plan.g2, 3, rd};
      EdgeColoring f = color_compose(comp, c, d);
      int idx = space.index_of(f.colors);
      if (idx < 0) {
        ok = false;
        break;
      }
      hit_classes.push_back(space.class_of[idx]);
    }
  }
  std::sort(hit_classes.begin(), hit_classes.end());
  ok = ok && std::adjacent_find(hit_classes.begin(), hit_classes.end()) ==
                 hit_classes.end();
  ok = ok && static_cast<long long>(hit_classes.size()) == rep.k1 * rep.k2;
  rep.bijection_ok = ok;

  std::ostringstream detail;
  detail << "K'(g1)=" << rep.k1 << " K'(g2)=" << rep.k2
         << " K'(composed)=" << rep.k_composed << " expected " << rep.k1 * rep.k2;
  rep.detail = detail.str();
  return rep;
}

}  // namespace

MultiplicativityReport verify_multiplicativity(const YPlan& plan) {
  return verify_impl(y_compose(plan));
}

MultiplicativityReport verify_multiplicativity(const HPlan& plan) {
  return verify_impl(h_compose(plan));
}

// --- plan text -------------------------------------------------------------

namespace {

std::pair<int, int> parse_pair(const std::string& token) {
  auto colon = token.find(':');
  if (colon == std::string::npos)
    throw parse_error("plan: expected <a>:<b>, got '" + token + "'");
  try {
    return {std::stoi(token.substr(0, colon)), std::stoi(token.substr(colon + 1))};
  } catch (const std::exception&) {
    throw parse_error("plan: bad pair '" + token + "'");
  }
}

}  // namespace

YPlan parse_y_plan(MultiGraph g1, MultiGraph g2, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string op;
  int v1, v2;
  if (!(in >> op >> v1 >> v2) || op != "y") throw parse_error("plan: expected 'y <v1> <v2> ...'");
  std::array<int, 3> xs{}, ys{};
  for (int i = 0; i < 3; ++i) {
    std::string token;
    if (!(in >> token)) throw parse_error("plan: expected three x:y pairs");
    std::tie(xs[i], ys[i]) = parse_pair(token);
  }
  auto expected = edges_at(g1, v1);
  std::array<int, 3> y_for_x{};
  std::array<char, 3> used{};
  for (int i = 0; i < 3; ++i) {
    int slot = -1;
    for (int s = 0; s < 3; ++s)
      if (expected[s] == xs[i] && !used[s]) slot = s;
    if (slot == -1) throw parse_error("plan: x edges must be the edges at v1");
    used[slot] = 1;
    y_for_x[slot] = ys[i];
  }
  return make_y_plan(std::move(g1), std::move(g2), v1, v2, y_for_x);
}

HPlan parse_h_plan(MultiGraph g1, MultiGraph g2, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string op, pair1, pair2;
  int x, y;
  if (!(in >> op >> x >> y >> pair1 >> pair2) || op != "h")
    throw parse_error("plan: expected 'h <x> <y> <s11>:<s21> <s12>:<s22>'");
  if (x < 0 || x >= g1.edge_count() || y < 0 || y >= g2.edge_count())
    throw parse_error("plan: designated edge out of range");
  auto [s11, s21] = parse_pair(pair1);
  auto [s12, s22] = parse_pair(pair2);
  const Edge& ex = g1.edge(x);
  const Edge& ey = g2.edge(y);
  if (!((s11 == ex.a && s12 == ex.b) || (s11 == ex.b && s12 == ex.a)))
    throw parse_error("plan: s11/s12 are not the endpoints of x");
  if (!((s21 == ey.a && s22 == ey.b) || (s21 == ey.b && s22 == ey.a)))
    throw parse_error("plan: s21/s22 are not the endpoints of y");
  HPlan plan;
  plan.x_edge = x;
  plan.y_edge = y;
  // crossed when endpoint_a of x pairs with endpoint_b of y
  const int partner_of_a = (s11 == ex.a) ? s21 : s22;
  plan.crossed = partner_of_a == ey.b;
  plan.g1 = std::move(g1);
  plan.g2 = std::move(g2);
  return plan;
}

std::string to_plan_text(const YPlan& plan) {
  std::ostringstream out;
  out << "y " << plan.v1 << " " << plan.v2;
  for (int i = 0; i < 3; ++i)
    out << " " << plan.x_edges[i] << ":" << plan.y_edges[i];
  return out.str();
}

std::string to_plan_text(const HPlan& plan) {
  const Edge& x = plan.g1.edge(plan.x_edge);
  const Edge& y = plan.g2.edge(plan.y_edge);
  std::ostringstream out;
  out << "h " << plan.x_edge << " " << plan.y_edge << " " << x.a << ":"
      << (plan.crossed ? y.b : y.a) << " " << x.b << ":"
      << (plan.crossed ? y.a : y.b);
  return out.str();
}

}  // namespace kempe
