#pragma once

#include <cstdint>
#include <optional>

#include "chromata/coloring.hpp"
#include "chromata/graph.hpp"

namespace chromata {

enum class EdgeOrderPolicy { smallest_last, input, random };

struct SolveConfig {
    int kappa = -1;  // -1 picks Delta + 6 at solve() entry
    int max_restarts = 32;
    int max_moves_per_edge = 64;
    std::uint64_t seed = 1;
    EdgeOrderPolicy order = EdgeOrderPolicy::smallest_last;
    int threads = 1;
};

struct SolveStats {
    long long assignments = 0;
    long long swaps = 0;
    long long uncolor_moves = 0;
    int restarts = 0;
    double wall_time_s = 0.0;  // informational only; never serialized
};

struct SolveOutcome {
    enum class Status { solved, exhausted };
    Status status = Status::exhausted;
    std::optional<EdgeColoring> coloring;
    SolveStats stats;
    bool solved() const { return status == Status::solved; }
};

/// Greedy valid-color assignment over an edge order, with Kempe-swap
/// recovery and uncolor backtracking on dead ends, then seeded restarts.
/// "exhausted" is an honest outcome, not an error. Deterministic per
/// (graph, cfg); worker count never changes the result.
SolveOutcome solve(const Graph& g, SolveConfig cfg);

/// Linear descent on kappa while solve keeps succeeding; returns the last
/// success. First element is the best kappa achieved.
std::pair<int, SolveOutcome> solve_minimize(const Graph& g, SolveConfig cfg);

std::vector<int> smallest_last_edge_order(const Graph& g);

}  // namespace chromata
