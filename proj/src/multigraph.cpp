#include "kempe/multigraph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace kempe {

MultiGraph::MultiGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)), incidence_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  for (size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    if (e.a < 0 || e.a >= n_ || e.b < 0 || e.b >= n_)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(e.a) + " " + std::to_string(e.b));
    if (e.a == e.b)
      throw std::invalid_argument("loop at vertex " + std::to_string(e.a));
    incidence_[e.a].push_back(static_cast<int>(id));
    incidence_[e.b].push_back(static_cast<int>(id));
  }
}

bool MultiGraph::is_simple() const {
  std::vector<std::pair<int, int>> seen;
  seen.reserve(edges_.size());
  for (const Edge& e : edges_)
    seen.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool MultiGraph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> vis(n_, 0);
  std::vector<int> stack = {0};
  vis[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int id : incidence_[v]) {
      int w = other_end(id, v);
      if (!vis[w]) {
        vis[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

bool validate_cubic(const MultiGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

bool same_labeled_graph(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  for (int id = 0; id < a.edge_count(); ++id)
    if (a.edge(id).a != b.edge(id).a || a.edge(id).b != b.edge(id).b) return false;
  return true;
}

std::optional<Bipartition> is_bipartite(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (int root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::vector<int> queue = {root};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int id : g.incident_edges(v)) {
        int w = g.other_end(id, v);
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition bp;
  for (int v = 0; v < n; ++v) (side[v] == 0 ? bp.side_a : bp.side_b).push_back(v);
  return bp;
}

// --- text format -----------------------------------------------------------

MultiGraph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  int line_no = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    if (word == "vertices") {
      if (n != -1) throw parse_error("line " + std::to_string(line_no) +
                                     ": duplicate vertices directive");
      if (!(ls >> n) || n < 0)
        throw parse_error("line " + std::to_string(line_no) + ": bad vertex count");
    } else if (word == "edge") {
      if (n == -1)
        throw parse_error("line " + std::to_string(line_no) +
                          ": edge before vertices directive");
      int u, v;
      if (!(ls >> u >> v))
        throw parse_error("line " + std::to_string(line_no) + ": bad edge line");
      edges.push_back({u, v});
    } else {
      throw parse_error("line " + std::to_string(line_no) + ": unknown directive '" +
                        word + "'");
    }
  }
  if (n == -1) throw parse_error("missing vertices directive");
  try {
    return MultiGraph(n, std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw parse_error(ex.what());
  }
}

std::string to_graph_text(const MultiGraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) out << "edge " << e.a << " " << e.b << "\n";
  return out.str();
}

// --- graph6 ----------------------------------------------------------------

MultiGraph parse_graph6(std::string_view line) {
  size_t pos = 0;
  if (line.rfind(">>graph6<<", 0) == 0) pos = 10;
  while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  size_t end = line.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(line[end - 1]))) --end;
  if (pos >= end) throw parse_error("empty graph6 string");

  auto byte = [&](size_t i) -> int {
    if (i >= end) throw parse_error("truncated graph6 string");
    int c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) throw parse_error("invalid graph6 character");
    return c - 63;
  };

  long long n;
  if (line[pos] != '~') {
    n = byte(pos);
    ++pos;
  } else if (pos + 1 < end && line[pos + 1] != '~') {
    n = (static_cast<long long>(byte(pos + 1)) << 12) | (byte(pos + 2) << 6) |
        byte(pos + 3);
    pos += 4;
  } else {
    throw parse_error("graph6 order too large");
  }
  if (n > 4096) throw parse_error("graph6 order too large");

  std::vector<Edge> edges;
  int bits_needed = static_cast<int>(n * (n - 1) / 2);
  int bit = 0, acc = 0, have = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (have == 0) {
        acc = byte(pos++);
        have = 6;
      }
      --have;
      if ((acc >> have) & 1) edges.push_back({i, j});
      ++bit;
    }
  }
  (void)bits_needed;
  return MultiGraph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const MultiGraph& g) {
  if (!g.is_simple())
    throw std::invalid_argument("graph6 output requires a simple graph");
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) adj[e.a][e.b] = adj[e.b][e.a] = 1;
  int acc = 0, have = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | adj[i][j];
      if (++have == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = have = 0;
      }
    }
  }
  if (have > 0) out.push_back(static_cast<char>((acc << (6 - have)) + 63));
  return out;
}

MultiGraph parse_graph_auto(std::string_view text) {
  // First non-comment, non-blank line decides the format.
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    size_t s = line.find_first_not_of(" \t\r");
    if (s != std::string_view::npos && line[s] != '#') {
      if (line.substr(s).rfind("vertices", 0) == 0) return parse_graph_text(text);
      return parse_graph6(line.substr(s));
    }
    pos = eol + 1;
  }
  throw parse_error("empty graph input");
}

}  // namespace kempe
