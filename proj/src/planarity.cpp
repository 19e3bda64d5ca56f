#include "kempe/planarity.hpp"

#include <algorithm>
#include <set>

namespace kempe {
namespace {

// Left-right planarity criterion on a simple graph. Directed edges are
// encoded as 2*edge + dir so the usual per-edge tables become flat arrays;
// -1 stands in for "no edge".
class LeftRightTest {
 public:
  LeftRightTest(int n, const std::vector<Edge>& edges)
      : n_(n),
        m_(static_cast<int>(edges.size())),
        edges_(edges),
        adj_(n),
        height_(n, -1),
        parent_edge_(n, -1),
        oriented_(m_, false),
        lowpt_(2 * m_, 0),
        lowpt2_(2 * m_, 0),
        nesting_(2 * m_, 0),
        lowpt_edge_(2 * m_, -1),
        ref_(2 * m_, -1),
        stack_bottom_(2 * m_, 0),
        out_(n) {
    for (int e = 0; e < m_; ++e) {
      adj_[edges_[e].a].push_back(e);
      adj_[edges_[e].b].push_back(e);
    }
  }

  bool planar() {
    if (n_ <= 4) return true;
    if (m_ > 3 * n_ - 6) return false;
    for (int v = 0; v < n_; ++v) {
      if (height_[v] == -1) {
        height_[v] = 0;
        roots_.push_back(v);
        orient(v);
      }
    }
    for (int v = 0; v < n_; ++v)
      std::stable_sort(out_[v].begin(), out_[v].end(),
                       [&](int x, int y) { return nesting_[x] < nesting_[y]; });
    for (int r : roots_) {
      if (!test(r)) return false;
    }
    return true;
  }

 private:
  int tail(int de) const { return (de & 1) ? edges_[de >> 1].b : edges_[de >> 1].a; }
  int head(int de) const { return (de & 1) ? edges_[de >> 1].a : edges_[de >> 1].b; }

  struct Interval {
    int low = -1;
    int high = -1;
    bool empty() const { return low == -1 && high == -1; }
  };
  struct ConflictPair {
    Interval left, right;
  };

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }
  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[p.right.low];
    if (p.right.empty()) return lowpt_[p.left.low];
    return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
  }

  void orient(int v) {
    const int e = parent_edge_[v];
    for (int ue : adj_[v]) {
      if (oriented_[ue]) continue;
      oriented_[ue] = true;
      const int de = 2 * ue + (edges_[ue].a == v ? 0 : 1);
      const int w = head(de);
      out_[v].push_back(de);
      lowpt_[de] = height_[v];
      lowpt2_[de] = height_[v];
      if (height_[w] == -1) {  // tree edge
        parent_edge_[w] = de;
        height_[w] = height_[v] + 1;
        orient(w);
      } else {  // back edge
        lowpt_[de] = height_[w];
      }
      nesting_[de] = 2 * lowpt_[de];
      if (lowpt2_[de] < height_[v]) ++nesting_[de];  // chordal
      if (e != -1) {
        if (lowpt_[de] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[de]);
          lowpt_[e] = lowpt_[de];
        } else if (lowpt_[de] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[de]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[de]);
        }
      }
    }
  }

  bool test(int v) {
    const int e = parent_edge_[v];
    for (int ei : out_[v]) {
      const int w = head(ei);
      stack_bottom_[ei] = stack_.size();
      if (ei == parent_edge_[w]) {  // tree edge
        if (!test(w)) return false;
      } else {  // back edge
        lowpt_edge_[ei] = ei;
        stack_.push_back(ConflictPair{{}, {ei, ei}});
      }
      if (lowpt_[ei] < height_[v]) {  // ei has a return edge
        if (ei == out_[v].front()) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
    }
    if (e != -1) trim_back_edges(tail(e));
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    // merge return edges of ei into p.right
    do {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.left.empty()) std::swap(q.left, q.right);
      if (!q.left.empty()) return false;  // not planar
      if (lowpt_[q.right.low] > lowpt_[e]) {
        if (p.right.empty()) p.right.high = q.right.high;
        else ref_[p.right.low] = q.right.high;
        p.right.low = q.right.low;
      } else {  // align
        ref_[q.right.low] = lowpt_edge_[e];
      }
    } while (stack_.size() != stack_bottom_[ei]);
    // merge conflicting return edges of earlier siblings into p.left
    while (!stack_.empty() && (conflicting(stack_.back().left, ei) ||
                               conflicting(stack_.back().right, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.right, ei)) std::swap(q.left, q.right);
      if (conflicting(q.right, ei)) return false;  // not planar
      if (p.right.low != -1) ref_[p.right.low] = q.right.high;
      if (q.right.low != -1) p.right.low = q.right.low;
      if (p.left.empty()) p.left.high = q.left.high;
      else ref_[p.left.low] = q.left.high;
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
    return true;
  }

  void trim_back_edges(int u) {
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) stack_.pop_back();
    if (!stack_.empty()) {
      ConflictPair p = stack_.back();
      stack_.pop_back();
      while (p.left.high != -1 && head(p.left.high) == u)
        p.left.high = ref_[p.left.high];
      if (p.left.high == -1 && p.left.low != -1) {
        ref_[p.left.low] = p.right.low;
        p.left.low = -1;
      }
      while (p.right.high != -1 && head(p.right.high) == u)
        p.right.high = ref_[p.right.high];
      if (p.right.high == -1 && p.right.low != -1) {
        ref_[p.right.low] = p.left.low;
        p.right.low = -1;
      }
      stack_.push_back(p);
    }
  }

  int n_, m_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> height_, parent_edge_;
  std::vector<bool> oriented_;
  std::vector<int> lowpt_, lowpt2_, nesting_, lowpt_edge_, ref_;
  std::vector<size_t> stack_bottom_;
  std::vector<std::vector<int>> out_;
  std::vector<ConflictPair> stack_;
  std::vector<int> roots_;
};

}  // namespace

bool is_planar(const MultiGraph& g) {
  // Parallel edges never change planarity; test the underlying simple graph.
  std::set<std::pair<int, int>> simple;
  for (const Edge& e : g.edges())
    simple.insert({std::min(e.a, e.b), std::max(e.a, e.b)});
  std::vector<Edge> edges;
  edges.reserve(simple.size());
  for (auto [a, b] : simple) edges.push_back({a, b});
  return LeftRightTest(g.vertex_count(), edges).planar();
}

}  // namespace kempe
