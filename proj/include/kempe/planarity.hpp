#pragma once

#include "kempe/multigraph.hpp"

namespace kempe {

// Planarity of the underlying simple graph (parallel edges embed alongside
// their partner, so they never change the answer). Left-right planarity
// criterion; linear-ish, exact.
bool is_planar(const MultiGraph& g);

}  // namespace kempe
