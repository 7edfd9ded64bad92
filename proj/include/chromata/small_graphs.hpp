#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "chromata/graph.hpp"

namespace chromata {

/// Canonical 64-bit code for graphs with n <= 11: the minimum upper-triangle
/// adjacency bitmask over vertex relabelings consistent with an iterated
/// neighbor-degree refinement. Equal codes <=> isomorphic.
std::uint64_t canonical_code(const Graph& g);

/// All graphs on exactly n vertices (isolated vertices allowed), one per
/// isomorphism class, by pendant-subset augmentation.
std::vector<Graph> all_graphs_exactly(int n);

/// Union of all_graphs_exactly(1..max_n).
std::vector<Graph> all_graphs_up_to(int max_n);

/// Connected graphs with at most max_m edges (plus K1), one per isomorphism
/// class, by edge/pendant augmentation.
std::vector<Graph> connected_graphs_by_edges(int max_m);

/// Connected planar graphs on at most max_n vertices, one per class.
std::vector<Graph> connected_planar_up_to(int max_n);

}  // namespace chromata
