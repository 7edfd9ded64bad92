#pragma once

#include <map>
#include <string>
#include <vector>

#include "chromata/graph.hpp"

namespace chromata {

/// Multiset of colors; union adds multiplicities.
class ColorMultiset {
public:
    void add(int color, int count = 1) {
        if (count <= 0) return;
        mul_[color] += count;
    }
    int mul(int color) const {
        auto it = mul_.find(color);
        return it == mul_.end() ? 0 : it->second;
    }
    ColorMultiset& merge(const ColorMultiset& other) {
        for (const auto& [c, k] : other.mul_) mul_[c] += k;
        return *this;
    }
    int total() const {
        int t = 0;
        for (const auto& [c, k] : mul_) t += k;
        return t;
    }
    bool empty() const { return mul_.empty(); }
    const std::map<int, int>& entries() const { return mul_; }

private:
    std::map<int, int> mul_;
};

/// Maximal path (or cycle) alternating two colors. A cycle component is
/// represented with is_cycle set; vertices then list the cycle once and
/// edges has the same length, closing back to vertices.front().
struct DichromaticPath {
    std::vector<int> vertices;
    std::vector<int> edges;
    int alpha = 0;
    int beta = 0;
    int first_color = 0;
    int last_color = 0;
    bool is_cycle = false;

    bool empty() const { return vertices.empty(); }
    int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Partial proper edge coloring with colors 1..kappa (0 = uncolored) and a
/// per-vertex used-color cache. Properness is enforced on assign; acyclicity
/// is the caller's business (that is what is_valid and the verifier are for).
class EdgeColoring {
public:
    EdgeColoring(const Graph& g, int kappa);

    const Graph& graph() const { return *g_; }
    int kappa() const { return kappa_; }

    int color(int e) const { return color_[static_cast<std::size_t>(e)]; }
    bool colored(int e) const { return color(e) != 0; }
    int colored_count() const { return colored_count_; }
    bool complete() const { return colored_count_ == g_->edge_count(); }

    bool vertex_has_color(int v, int c) const {
        return cnt_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] != 0;
    }

    std::vector<int> used_colors(int v) const;
    std::vector<int> free_colors(int v) const;
    std::vector<int> free_colors_edge(int e) const;
    std::vector<int> candidate_colors(int e) const;

    /// Upsilon(uv) = U(v) \ {phi(uv)}; defined for uncolored uv too, in which
    /// case nothing is subtracted. (u, v) must be adjacent.
    std::vector<int> upsilon(int u, int v) const;
    /// W(uv) = neighbors u_i of u with phi(u u_i) in Upsilon(uv).
    std::vector<int> w_set(int u, int v) const;
    ColorMultiset upsilon_multiset(const std::vector<std::pair<int, int>>& ordered_edges) const;

    DichromaticPath maximal_dichromatic_path(int v, int alpha, int beta) const;
    bool has_critical_path(int alpha, int beta, int u, int v) const;
    bool has_alternating_path(int alpha, int beta, int u, int v) const;

    /// True iff assigning alpha to e closes no dichromatic cycle. alpha must
    /// be a candidate for the uncolored edge e.
    bool is_valid(int e, int alpha);

    void assign(int e, int alpha);
    /// Unchecked write for externally supplied colorings headed to the
    /// verifier; properness is the verifier's question there, not a
    /// precondition. Palette bounds still apply.
    void force_assign(int e, int alpha);
    void unassign(int e);
    /// Kempe move: exchange alpha and beta along a maximal path. The path is
    /// revalidated against the current coloring; cycles require force.
    void swap_path(const DichromaticPath& path, bool force = false);

    /// Cache invariant: per-vertex used sets equal recomputation from scratch.
    bool cache_consistent() const;

private:
    void bump(int v, int c, int delta);
    // Follow the alpha/beta walk from v along first edge e; appends visited
    // vertices/edges. Returns true if the walk closed back to v.
    bool walk(int v, int e, int alpha, int beta, std::vector<int>& vs, std::vector<int>& es) const;
    DichromaticPath oriented_from(int u, int alpha, int beta) const;

    const Graph* g_;
    int kappa_;
    std::vector<int> color_;
    std::vector<std::vector<std::uint8_t>> cnt_;
    int colored_count_ = 0;
};

/// JSON {kappa, colors: [[edge_id, color], ...]}.
std::string coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const Graph& g, const std::string& text);

}  // namespace chromata
