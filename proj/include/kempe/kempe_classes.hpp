#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kempe/coloring.hpp"

namespace kempe {

// A sequence of switches applied from a start coloring. Each step must be a
// valid switch of the coloring produced by the preceding prefix; replay()
// checks this as it goes.
struct SwitchSequence {
  EdgeColoring start;
  std::vector<Switch> steps;

  EdgeColoring replay() const;
};

enum class ClassMethod { raw, fixed_vertex };

struct ClassReport {
  int palette = 3;
  ClassMethod method = ClassMethod::fixed_vertex;
  long long coloring_count = 0;  // size of the method's state space
  int class_count = 0;           // K'(G, n)
  std::vector<std::vector<Color>> representatives;  // lex-least per class
  std::vector<long long> class_sizes;               // aligned with reps
};

// The Kempe state space over one graph: every coloring of the chosen method,
// linked by single switches (chains through vertex 0 are excluded in the
// fixed-vertex method, whose colorings pin the colors at vertex 0).
struct KempeStateSpace {
  const MultiGraph* graph = nullptr;
  int palette = 3;
  ClassMethod method = ClassMethod::fixed_vertex;
  std::vector<std::vector<Color>> colorings;  // sorted lexicographically
  std::vector<int> class_of;                  // class index per coloring
  int class_count = 0;

  int index_of(const std::vector<Color>& colors) const;  // -1 if absent
};

inline constexpr size_t kStateSpaceGuard = 1000000;

KempeStateSpace build_state_space(const MultiGraph& g, int palette,
                                  ClassMethod method);

// K'(G, n): the number of switch-equivalence classes of proper n-edge
// colorings. The raw and fixed-vertex methods agree on the class count.
ClassReport count_classes(const MultiGraph& g, int palette,
                          ClassMethod method = ClassMethod::fixed_vertex);

// Shortest witnessing switch sequence from c to d, if they are equivalent.
std::optional<SwitchSequence> are_equivalent(const EdgeColoring& c,
                                             const EdgeColoring& d);

// Realizes a global color permutation as switches: each transposition factor
// switches every chain of that color pair. perm[i] is the image of color i;
// the replayed result satisfies colors'[e] == perm[colors[e]].
SwitchSequence permute_colors_via_switches(const EdgeColoring& c,
                                           const std::vector<Color>& perm);

// Rewrites a switch sequence whose endpoints agree on the edges at v into one
// that never touches an edge incident to v. Tracks a running color
// permutation; a step whose chain misses v keeps its chain with the permuted
// pair, a step whose chain passes through v is replaced by switches on all
// other chains of its pair. For palette <= deg(v)+1 the rewritten sequence
// ends exactly at the original endpoint.
SwitchSequence normalize_switch_sequence(const SwitchSequence& seq, int v);

// DOT rendering of the fixed-vertex state space: one node per coloring, one
// edge per switch; component count equals K'(G, n).
std::string export_kempe_graph(const MultiGraph& g, int palette);

// Pseudorandom valid switch sequence on a 3-edge-colorable cubic graph whose
// endpoints agree on the edges at v: a random walk, then the color
// permutation restoring the colors at v, realized by switches.
SwitchSequence random_sequence_fixed_at(const MultiGraph& g, int v, int steps,
                                        uint64_t seed);

}  // namespace kempe
