#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace chromata {

/// Simple undirected graph with dense vertex ids 0..n-1 and dense edge ids
/// assigned in input order. Immutable after construction; derived graphs
/// (subgraphs, strips) are built as new objects.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

    /// Sorted neighbor list.
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    /// Incident (neighbor, edge id) pairs, sorted by neighbor.
    const std::vector<std::pair<int, int>>& incident(int v) const {
        return inc_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const { return max_degree_; }
    int min_degree() const { return min_degree_; }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
    /// Edge id of uv, or -1.
    int edge_index(int u, int v) const;

    /// Edge endpoint other than v.
    int other_end(int e, int v) const {
        auto [a, b] = edges_[static_cast<std::size_t>(e)];
        return a == v ? b : a;
    }

    /// Connected components as vertex lists (sorted, deterministic order).
    std::vector<std::vector<int>> components() const;
    bool connected() const;

    /// Two-connectivity: connected, n >= 3, and no articulation point.
    bool two_connected() const;

    bool has_cycle() const;

    /// Induced subgraph on `keep` (original ids remapped densely in the given
    /// order). Optionally reports the old id of each new vertex.
    Graph induced(const std::vector<int>& keep) const;

    /// Graph with one edge removed; vertex set unchanged, edge ids compacted.
    Graph without_edge(int e) const;

    /// Single-pass removal of every vertex of degree <= 2 at call time.
    /// If `kept_old_ids` is given it receives the original id per new vertex.
    Graph strip_small_vertices(std::vector<int>* kept_old_ids = nullptr) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<std::pair<int, int>>> inc_;
    int max_degree_ = 0;
    int min_degree_ = 0;
};

}  // namespace chromata
