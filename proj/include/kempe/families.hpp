#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kempe/multigraph.hpp"

namespace kempe {

enum class FamilyKind {
  k33,
  k4,
  theta,
  moebius_ladder,  // 2k-cycle plus antipodal chords, k >= 3
  prism,           // two k-cycles joined by rungs, k >= 3
  crossed_prism,   // two 2k-cycles, spokes crossed on even squares, k >= 2
  y_power_k33,     // K_3,3 glued to itself k times over 3-cuts, k >= 1
  y_power_of,      // same fold over an arbitrary cubic base
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::k33;
  int k = 1;
  std::optional<MultiGraph> base;  // for y_power_of
};

MultiGraph generate(const FamilySpec& spec);

// Left fold of base over 3-cuts, k copies, with the default plan (vertex 0 on
// both sides, identity correspondence).
MultiGraph y_power(const MultiGraph& base, int k);

std::optional<FamilyKind> family_kind_from_name(std::string_view name);
std::string family_kind_name(FamilyKind kind);

// Census filters. `simple` selects the simple-graph census; with it off the
// census covers all loopless cubic multigraphs. Unset tri-state filters
// accept everything.
struct CensusFilters {
  bool simple = true;
  std::optional<bool> bipartite;
  std::optional<bool> planar;
};

inline constexpr int kCensusMaxOrder = 14;

// Every connected cubic graph with at most max_n vertices, one per
// isomorphism class, ordered by (order, canonical code).
std::vector<MultiGraph> census(int max_n, const CensusFilters& filters = {});

// Census graphs of exactly order n.
std::vector<MultiGraph> census_at(int n, const CensusFilters& filters = {});

struct OneClassRequire {
  bool simple = true;
  bool bipartite = true;
  bool nonplanar = true;
  bool three_connected = false;
};

// Census graphs at order n matching the requirements with K'(., 3) = 1.
std::vector<MultiGraph> search_one_class(int n, const OneClassRequire& require);

struct SpectrumEntry {
  long long k_prime = 0;
  int order = 0;
  MultiGraph witness;  // first census graph attaining the value
};

// Observed K'(., 3) values over the filtered census, with first witnesses.
// K' evaluation fans out over `jobs` workers; the merge is order-independent.
std::vector<SpectrumEntry> kprime_spectrum(int max_n,
                                           const CensusFilters& filters = {},
                                           int jobs = 1);

// True iff the cubic graph is 3-connected: connected with no bridge and no
// nontrivial 2-edge cut.
bool is_three_connected_cubic(const MultiGraph& g);

}  // namespace kempe
