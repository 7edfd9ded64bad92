#include "chromata/random_planar.hpp"

#include <array>

#include "chromata/errors.hpp"

namespace chromata {

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw InvalidParam("draw_below: zero bound");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

Graph random_planar(int n, const Rational& edge_keep_prob, std::uint64_t seed) {
    if (n < 3) throw InvalidParam("random_planar: n must be at least 3");
    if (edge_keep_prob < Rational(0) || edge_keep_prob > Rational(1))
        throw InvalidParam("random_planar: edge_keep_prob outside [0,1]");

    std::mt19937_64 rng(seed);
    std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 2, 1}};
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 2}};
    for (int v = 3; v < n; ++v) {
        std::size_t fi = static_cast<std::size_t>(draw_below(rng, faces.size()));
        std::array<int, 3> f = faces[fi];
        faces[fi] = {f[0], f[1], v};
        faces.push_back({f[1], f[2], v});
        faces.push_back({f[2], f[0], v});
        edges.emplace_back(f[0], v);
        edges.emplace_back(f[1], v);
        edges.emplace_back(f[2], v);
    }

    std::uint64_t p = static_cast<std::uint64_t>(edge_keep_prob.num());
    std::uint64_t q = static_cast<std::uint64_t>(edge_keep_prob.den());
    std::vector<std::pair<int, int>> kept;
    for (const auto& e : edges) {
        bool keep = edge_keep_prob == Rational(1) || draw_below(rng, q) < p;
        if (keep) kept.push_back(e);
    }

    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : kept) used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    int next_id = 0;
    for (int v = 0; v < n; ++v)
        if (used[static_cast<std::size_t>(v)]) remap[static_cast<std::size_t>(v)] = next_id++;
    for (auto& [u, v] : kept) {
        u = remap[static_cast<std::size_t>(u)];
        v = remap[static_cast<std::size_t>(v)];
    }
    return Graph(next_id, std::move(kept));
}

}  // namespace chromata
