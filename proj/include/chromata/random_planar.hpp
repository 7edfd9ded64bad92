#pragma once

#include <cstdint>

#include "chromata/graph.hpp"
#include "chromata/prng.hpp"
#include "chromata/rational.hpp"

namespace chromata {

/// Random planar graph: grow a triangulation by inserting each new vertex
/// into a uniformly random face, keep each edge independently with
/// probability edge_keep_prob (exact rational test), drop isolated vertices.
/// Deterministic per (n, edge_keep_prob, seed).
Graph random_planar(int n, const Rational& edge_keep_prob, std::uint64_t seed);

}  // namespace chromata
