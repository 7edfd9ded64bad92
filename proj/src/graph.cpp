#include "chromata/graph.hpp"

#include <algorithm>
#include <functional>

#include "chromata/errors.hpp"

namespace chromata {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw InvalidParam("Graph: negative vertex count");
    adj_.assign(static_cast<std::size_t>(n_), {});
    inc_.assign(static_cast<std::size_t>(n_), {});
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw InvalidParam("Graph: edge endpoint out of range");
        if (u == v) throw NonSimpleError("Graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        inc_[static_cast<std::size_t>(u)].emplace_back(v, static_cast<int>(e));
        inc_[static_cast<std::size_t>(v)].emplace_back(u, static_cast<int>(e));
    }
    for (int v = 0; v < n_; ++v) {
        auto& a = adj_[static_cast<std::size_t>(v)];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw NonSimpleError("Graph: parallel edge at vertex " + std::to_string(v));
        auto& i = inc_[static_cast<std::size_t>(v)];
        std::sort(i.begin(), i.end());
    }
    max_degree_ = 0;
    min_degree_ = n_ > 0 ? n_ : 0;
    for (int v = 0; v < n_; ++v) {
        max_degree_ = std::max(max_degree_, degree(v));
        min_degree_ = std::min(min_degree_, degree(v));
    }
    if (n_ == 0) min_degree_ = 0;
}

int Graph::edge_index(int u, int v) const {
    const auto& inc = inc_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(inc.begin(), inc.end(), std::make_pair(v, -1));
    if (it != inc.end() && it->first == v) return it->second;
    return -1;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n_; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int w : neighbors(v)) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool Graph::connected() const { return n_ <= 1 || components().size() == 1; }

bool Graph::two_connected() const {
    if (n_ < 3 || !connected()) return false;
    // Hopcroft-Tarjan articulation point search.
    std::vector<int> disc(static_cast<std::size_t>(n_), -1), low(static_cast<std::size_t>(n_), 0);
    int timer = 0;
    bool has_cut = false;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
        int children = 0;
        for (int w : neighbors(v)) {
            if (w == parent) continue;
            if (disc[static_cast<std::size_t>(w)] < 0) {
                ++children;
                dfs(w, v);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
                if (parent >= 0 &&
                    low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(v)])
                    has_cut = true;
            } else {
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
            }
        }
        if (parent < 0 && children > 1) has_cut = true;
    };
    dfs(0, -1);
    return !has_cut;
}

bool Graph::has_cycle() const {
    // A forest has exactly n - #components edges.
    int comp_count = static_cast<int>(components().size());
    return edge_count() > n_ - comp_count;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<int> new_id(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) new_id[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (const auto& [u, v] : edges_) {
        int a = new_id[static_cast<std::size_t>(u)], b = new_id[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) es.emplace_back(a, b);
    }
    return Graph(static_cast<int>(keep.size()), std::move(es));
}

Graph Graph::without_edge(int e) const {
    std::vector<std::pair<int, int>> es;
    es.reserve(edges_.size() - 1);
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (static_cast<int>(i) != e) es.push_back(edges_[i]);
    return Graph(n_, std::move(es));
}

Graph Graph::strip_small_vertices(std::vector<int>* kept_old_ids) const {
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if (degree(v) >= 3) keep.push_back(v);
    if (kept_old_ids) *kept_old_ids = keep;
    return induced(keep);
}

}  // namespace chromata
