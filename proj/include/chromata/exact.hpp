#pragma once

#include <optional>

#include "chromata/coloring.hpp"
#include "chromata/graph.hpp"

namespace chromata {

enum class Decision { yes, no, budget_exceeded };

struct DecisionResult {
    Decision status = Decision::no;
    std::optional<EdgeColoring> certificate;  // tied to the input graph's lifetime
    long long nodes_expanded = 0;
};

/// Complete DFS over edge assignments in a fixed adjacency-first edge order
/// with validity pruning. Symmetry is broken by canonical color
/// introduction: a branch may use color c only if c <= (max color used so
/// far) + 1. budget counts search nodes; <= 0 means unlimited.
DecisionResult acyclic_colorable(const Graph& g, int kappa, long long budget = 0);

struct ExactResult {
    int chi_a = 0;
    std::optional<EdgeColoring> certificate;
    long long nodes_expanded = 0;
    int bound_used = 0;  // the lower bound the ascent started from
};

/// Ascends kappa from chi_a_lower_bound until the decision turns yes.
/// Throws BudgetExceeded (with the best-known bracket in the message) if the
/// shared node budget runs out first.
ExactResult chi_a_exact(const Graph& g, long long budget = 0);

}  // namespace chromata
