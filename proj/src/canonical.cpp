#include "kempe/canonical.hpp"

#include <algorithm>
#include <map>

namespace kempe {
namespace {

// Individualization-refinement search for the minimum adjacency code over
// all vertex orderings compatible with the refinement tree. The choices made
// here (signature construction, target cell, cell splitting) depend only on
// the current colors and adjacency multiplicities, never on input labels, so
// the resulting minimum is a graph invariant.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const MultiGraph& g) : n_(g.vertex_count()) {
    mult_.assign(n_, std::vector<uint8_t>(n_, 0));
    for (const Edge& e : g.edges()) {
      ++mult_[e.a][e.b];
      ++mult_[e.b][e.a];
    }
    m_ = g.edge_count();
  }

  std::vector<uint8_t> run() {
    if (n_ > 255 || m_ > 255)
      throw guard_error("canonical_form: graph too large for canonical coding");
    std::vector<int> color(n_, 0);
    // Seed colors from the local multiplicity profile.
    {
      std::vector<std::vector<int>> sig(n_);
      for (int v = 0; v < n_; ++v) {
        for (int u = 0; u < n_; ++u)
          if (mult_[v][u]) sig[v].push_back(mult_[v][u]);
        std::sort(sig[v].begin(), sig[v].end());
      }
      rank_signatures(sig, color);
    }
    refine(color);
    best_.clear();
    search(color);
    std::vector<uint8_t> code;
    code.push_back(static_cast<uint8_t>(n_));
    code.push_back(static_cast<uint8_t>(m_));
    code.insert(code.end(), best_.begin(), best_.end());
    return code;
  }

 private:
  template <typename Sig>
  void rank_signatures(const std::vector<Sig>& sig, std::vector<int>& color) {
    std::map<Sig, int> ranks;
    for (const Sig& s : sig) ranks.emplace(s, 0);
    int next = 0;
    for (auto& [key, rank] : ranks) rank = next++;
    for (int v = 0; v < n_; ++v) color[v] = ranks[sig[v]];
  }

  void refine(std::vector<int>& color) {
    for (;;) {
      int before = count_colors(color);
      std::vector<std::vector<int>> sig(n_);
      for (int v = 0; v < n_; ++v) {
        sig[v].push_back(color[v]);
        std::vector<std::pair<int, int>> nb;
        for (int u = 0; u < n_; ++u)
          if (mult_[v][u]) nb.emplace_back(color[u], mult_[v][u]);
        std::sort(nb.begin(), nb.end());
        for (auto [c, m] : nb) {
          sig[v].push_back(c);
          sig[v].push_back(m);
        }
      }
      rank_signatures(sig, color);
      if (count_colors(color) == before) return;
    }
  }

  int count_colors(const std::vector<int>& color) const {
    int mx = -1;
    for (int c : color) mx = std::max(mx, c);
    return mx + 1;
  }

  void search(const std::vector<int>& color) {
    // Locate the first non-singleton color class.
    int target = -1;
    std::vector<int> cell;
    for (int c = 0; c < n_ && target == -1; ++c) {
      cell.clear();
      for (int v = 0; v < n_; ++v)
        if (color[v] == c) cell.push_back(v);
      if (cell.size() > 1) target = c;
    }
    if (target == -1) {
      emit_leaf(color);
      return;
    }
    for (int v : cell) {
      std::vector<int> next(n_);
      for (int u = 0; u < n_; ++u)
        next[u] = 2 * color[u] + (color[u] == target && u != v ? 1 : 0);
      refine(next);
      search(next);
    }
  }

  void emit_leaf(const std::vector<int>& color) {
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) order[color[v]] = v;
    std::vector<uint8_t> code;
    code.reserve(n_ * (n_ - 1) / 2);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) code.push_back(mult_[order[i]][order[j]]);
    if (best_.empty() || code < best_) best_ = std::move(code);
  }

  int n_;
  int m_;
  std::vector<std::vector<uint8_t>> mult_;
  std::vector<uint8_t> best_;
};

}  // namespace

std::vector<uint8_t> canonical_form(const MultiGraph& g) {
  if (g.vertex_count() == 0) return {0, 0};
  return CanonicalSearch(g).run();
}

std::string canonical_hex(const MultiGraph& g) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (uint8_t b : canonical_form(g)) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace kempe
