#include "chromata/small_graphs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "chromata/embedding.hpp"
#include "chromata/errors.hpp"

namespace chromata {

namespace {

std::uint64_t pack_edges(int n, const std::vector<std::pair<int, int>>& edges,
                         const std::vector<int>& relabel) {
    std::uint64_t code = 0;
    auto bit_index = [n](int a, int b) {
        if (a > b) std::swap(a, b);
        // upper triangle, row-major
        return a * n - a * (a + 1) / 2 + (b - a - 1);
    };
    for (const auto& [u, v] : edges)
        code |= std::uint64_t{1} << bit_index(relabel[static_cast<std::size_t>(u)],
                                              relabel[static_cast<std::size_t>(v)]);
    return code;
}

// Iterated neighbor-color refinement; returns a stable color per vertex.
std::vector<std::uint64_t> wl_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> color(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = static_cast<std::uint64_t>(g.degree(v));
    for (int round = 0; round < n; ++round) {
        std::vector<std::uint64_t> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<std::uint64_t> sig;
            for (int w : g.neighbors(v)) sig.push_back(color[static_cast<std::size_t>(w)]);
            std::sort(sig.begin(), sig.end());
            std::uint64_t h = color[static_cast<std::size_t>(v)] * 0x9e3779b97f4a7c15ULL + 0x100000001b3ULL;
            for (std::uint64_t s : sig) h = (h ^ s) * 0x100000001b3ULL;
            next[static_cast<std::size_t>(v)] = h;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

void permute_within_classes(const std::vector<std::vector<int>>& classes, std::size_t ci,
                            std::vector<int>& relabel, int& next_label, const Graph& g,
                            std::uint64_t& best) {
    if (ci == classes.size()) {
        best = std::min(best, pack_edges(g.vertex_count(), g.edges(), relabel));
        return;
    }
    std::vector<int> members = classes[ci];
    std::sort(members.begin(), members.end());
    do {
        int base = next_label;
        for (int v : members) relabel[static_cast<std::size_t>(v)] = next_label++;
        permute_within_classes(classes, ci + 1, relabel, next_label, g, best);
        next_label = base;
    } while (std::next_permutation(members.begin(), members.end()));
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    int n = g.vertex_count();
    if (n > 11) throw InvalidParam("canonical_code: supports n <= 11");
    if (n == 0) return 0;
    std::vector<std::uint64_t> colors = wl_colors(g);
    std::map<std::uint64_t, std::vector<int>> by_color;
    for (int v = 0; v < n; ++v) by_color[colors[static_cast<std::size_t>(v)]].push_back(v);
    std::vector<std::vector<int>> classes;
    for (auto& [c, members] : by_color) classes.push_back(members);

    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> relabel(static_cast<std::size_t>(n), -1);
    int next_label = 0;
    permute_within_classes(classes, 0, relabel, next_label, g, best);
    // Encode n alongside the mask so graphs of different orders never collide.
    return (static_cast<std::uint64_t>(n) << 56) | (best & ((std::uint64_t{1} << 56) - 1));
}

std::vector<Graph> all_graphs_exactly(int n) {
    if (n < 1 || n > 8) throw InvalidParam("all_graphs_exactly: supports 1 <= n <= 8");
    std::vector<Graph> level{Graph(1, {})};
    for (int k = 2; k <= n; ++k) {
        std::set<std::uint64_t> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            for (unsigned subset = 0; subset < (1u << (k - 1)); ++subset) {
                std::vector<std::pair<int, int>> edges = g.edges();
                for (int b = 0; b < k - 1; ++b)
                    if (subset & (1u << b)) edges.emplace_back(b, k - 1);
                Graph candidate(k, std::move(edges));
                std::uint64_t code = canonical_code(candidate);
                if (seen.insert(code).second) next.push_back(std::move(candidate));
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Graph> all_graphs_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Graph> level = all_graphs_exactly(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Graph> connected_graphs_by_edges(int max_m) {
    std::vector<Graph> out{Graph(1, {})};
    std::vector<Graph> level{Graph(2, {{0, 1}})};
    if (max_m >= 1) out.push_back(level.front());
    for (int m = 2; m <= max_m; ++m) {
        std::set<std::uint64_t> seen;
        std::vector<Graph> next;
        auto offer = [&](Graph candidate) {
            std::uint64_t code = canonical_code(candidate);
            if (seen.insert(code).second) next.push_back(std::move(candidate));
        };
        for (const Graph& g : level) {
            int n = g.vertex_count();
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    auto edges = g.edges();
                    edges.emplace_back(u, v);
                    offer(Graph(n, std::move(edges)));
                }
            for (int u = 0; u < n; ++u) {
                auto edges = g.edges();
                edges.emplace_back(u, n);
                offer(Graph(n + 1, std::move(edges)));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

std::vector<Graph> connected_planar_up_to(int max_n) {
    std::vector<Graph> out;
    std::vector<Graph> level{Graph(1, {})};
    out.push_back(level.front());
    for (int k = 2; k <= max_n; ++k) {
        std::set<std::uint64_t> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            for (unsigned subset = 1; subset < (1u << (k - 1)); ++subset) {
                std::vector<std::pair<int, int>> edges = g.edges();
                for (int b = 0; b < k - 1; ++b)
                    if (subset & (1u << b)) edges.emplace_back(b, k - 1);
                Graph candidate(k, std::move(edges));
                if (!is_planar(candidate)) continue;
                std::uint64_t code = canonical_code(candidate);
                if (seen.insert(code).second) next.push_back(std::move(candidate));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

}  // namespace chromata
