#include "chromata/exact.hpp"

#include <algorithm>

#include "chromata/errors.hpp"
#include "chromata/verify.hpp"

namespace chromata {

namespace {

// Adjacency-first deterministic edge order: BFS over the line graph from the
// lowest unvisited edge id, so each edge (within a component) touches an
// already-ordered one and pruning bites early.
std::vector<int> search_order(const Graph& g) {
    int m = g.edge_count();
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (int s = 0; s < m; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> queue{s};
        seen[static_cast<std::size_t>(s)] = 1;
        std::size_t head = 0;
        while (head < queue.size()) {
            int e = queue[head++];
            order.push_back(e);
            auto [u, v] = g.edge(e);
            for (int x : {u, v}) {
                for (const auto& [w, e2] : g.incident(x)) {
                    (void)w;
                    if (!seen[static_cast<std::size_t>(e2)]) {
                        seen[static_cast<std::size_t>(e2)] = 1;
                        queue.push_back(e2);
                    }
                }
            }
        }
    }
    return order;
}

struct Search {
    const Graph& g;
    int kappa;
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;
    std::vector<int> order;
    EdgeColoring coloring;

    Search(const Graph& graph, int k, long long b)
        : g(graph), kappa(k), budget(b), order(search_order(graph)), coloring(graph, k) {}

    bool dfs(std::size_t pos, int max_used) {
        if (pos == order.size()) return true;
        if (budget > 0 && ++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        int e = order[pos];
        auto [u, v] = g.edge(e);
        int limit = std::min(kappa, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (coloring.vertex_has_color(u, c) || coloring.vertex_has_color(v, c)) continue;
            if (!coloring.is_valid(e, c)) continue;
            coloring.assign(e, c);
            if (dfs(pos + 1, std::max(max_used, c))) return true;
            coloring.unassign(e);
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

DecisionResult acyclic_colorable(const Graph& g, int kappa, long long budget) {
    DecisionResult result;
    if (kappa < 0) throw InvalidParam("acyclic_colorable: negative kappa");
    Search search(g, kappa, budget);
    bool found = search.dfs(0, 0);
    result.nodes_expanded = search.nodes;
    if (found) {
        result.status = Decision::yes;
        result.certificate = std::move(search.coloring);
    } else if (search.out_of_budget) {
        result.status = Decision::budget_exceeded;
    } else {
        result.status = Decision::no;
    }
    return result;
}

ExactResult chi_a_exact(const Graph& g, long long budget) {
    ExactResult result;
    result.bound_used = chi_a_lower_bound(g);
    long long remaining = budget;
    for (int kappa = result.bound_used;; ++kappa) {
        DecisionResult d = acyclic_colorable(g, kappa, remaining);
        result.nodes_expanded += d.nodes_expanded;
        if (budget > 0) {
            remaining -= d.nodes_expanded;
            if (remaining < 0) remaining = 0;
        }
        if (d.status == Decision::yes) {
            result.chi_a = kappa;
            result.certificate = std::move(d.certificate);
            return result;
        }
        if (d.status == Decision::budget_exceeded)
            throw BudgetExceeded("chi_a_exact: budget exhausted; chi_a >= " +
                                 std::to_string(kappa) + " (no decisions above)");
        if (kappa > g.edge_count() + 1)
            throw std::logic_error("chi_a_exact: ascent passed the edge count, which is impossible");
    }
}

}  // namespace chromata
