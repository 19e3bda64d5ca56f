#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kempe/multigraph.hpp"

namespace kempe {

// Canonical code for a multigraph: equal codes iff the graphs are isomorphic
// (as unlabeled loopless multigraphs). Computed by color refinement plus
// backtracking over vertex orderings; exponential worst case, intended for
// desk-scale graphs (n <= ~20).
std::vector<uint8_t> canonical_form(const MultiGraph& g);

// Lowercase-hex rendering of canonical_form, for reports.
std::string canonical_hex(const MultiGraph& g);

bool isomorphic(const MultiGraph& a, const MultiGraph& b);

}  // namespace kempe
