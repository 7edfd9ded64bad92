#include "chromata/verify.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "chromata/errors.hpp"

namespace chromata {

namespace {

// Finds one cycle among edges colored alpha or beta (beta may equal alpha to
// check a single color class, which only matters for improper inputs).
// Prune degree-1 vertices of the pair subgraph; whatever survives has
// minimum degree 2 and any walk in it must revisit a vertex, closing a
// cycle. Witness minimality is not attempted.
bool find_pair_cycle(const Graph& g, const EdgeColoring& c, int alpha, int beta,
                     Violation& out) {
    int n = g.vertex_count();
    auto in_pair = [&](int e) {
        int col = c.color(e);
        return col != 0 && (col == alpha || col == beta);
    };
    std::vector<char> edge_alive(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    int alive = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!in_pair(e)) continue;
        edge_alive[static_cast<std::size_t>(e)] = 1;
        ++alive;
        auto [u, v] = g.edge(e);
        deg[static_cast<std::size_t>(u)]++;
        deg[static_cast<std::size_t>(v)]++;
    }
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (deg[static_cast<std::size_t>(v)] != 1) continue;
        for (const auto& [w, e] : g.incident(v)) {
            if (!edge_alive[static_cast<std::size_t>(e)]) continue;
            edge_alive[static_cast<std::size_t>(e)] = 0;
            --alive;
            deg[static_cast<std::size_t>(v)]--;
            deg[static_cast<std::size_t>(w)]--;
            if (deg[static_cast<std::size_t>(w)] == 1) queue.push_back(w);
            break;
        }
    }
    if (alive == 0) return false;

    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (deg[static_cast<std::size_t>(v)] > 0) start = v;
    std::vector<int> order_pos(static_cast<std::size_t>(n), -1);
    std::vector<int> walk_v, walk_e;
    int cur = start, in_edge = -1;
    for (;;) {
        if (order_pos[static_cast<std::size_t>(cur)] >= 0) {
            std::size_t from = static_cast<std::size_t>(order_pos[static_cast<std::size_t>(cur)]);
            out.kind = Violation::Kind::bichromatic_cycle;
            out.vertices.assign(walk_v.begin() + static_cast<std::ptrdiff_t>(from), walk_v.end());
            out.edges.assign(walk_e.begin() + static_cast<std::ptrdiff_t>(from), walk_e.end());
            return true;
        }
        order_pos[static_cast<std::size_t>(cur)] = static_cast<int>(walk_v.size());
        walk_v.push_back(cur);
        int next_edge = -1;
        for (const auto& [w, e] : g.incident(cur)) {
            (void)w;
            if (edge_alive[static_cast<std::size_t>(e)] && e != in_edge) {
                next_edge = e;
                break;
            }
        }
        walk_e.push_back(next_edge);
        in_edge = next_edge;
        cur = g.other_end(next_edge, cur);
    }
}

}  // namespace

VerifyReport verify(const Graph& g, const EdgeColoring& c, VerifyOptions opts) {
    if (!opts.allow_partial && !c.complete())
        throw InvalidParam("verify: coloring is partial (pass allow_partial to check anyway)");

    VerifyReport report;
    std::set<int> palette;
    for (int e = 0; e < g.edge_count(); ++e) {
        int col = c.color(e);
        if (col > c.kappa())
            throw PaletteExceeded("verify: color " + std::to_string(col) + " exceeds kappa");
        if (col) palette.insert(col);
    }
    report.colors_used = static_cast<int>(palette.size());

    // Properness: scan each vertex for duplicated colors among colored edges.
    report.proper = true;
    for (int v = 0; v < g.vertex_count() && report.proper; ++v) {
        std::vector<std::pair<int, int>> seen;  // (color, edge)
        for (const auto& [w, e] : g.incident(v)) {
            (void)w;
            int col = c.color(e);
            if (!col) continue;
            for (const auto& [pc, pe] : seen) {
                if (pc == col) {
                    Violation viol;
                    viol.kind = Violation::Kind::clash;
                    viol.vertices = {v};
                    viol.edges = {pe, e};
                    report.violations.push_back(std::move(viol));
                    report.proper = false;
                    break;
                }
            }
            if (!report.proper) break;
            seen.emplace_back(col, e);
        }
    }

    // Acyclicity via pair subgraphs. A cycle on <= 2 distinct colors always
    // has a color change at some vertex, so checking the pairs that meet at
    // a vertex suffices; single color classes are checked too, which only
    // fires on improper inputs.
    report.acyclic = true;
    std::set<std::pair<int, int>> pairs;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> used = c.used_colors(v);
        used.erase(std::unique(used.begin(), used.end()), used.end());
        for (std::size_t i = 0; i < used.size(); ++i)
            for (std::size_t j = i + 1; j < used.size(); ++j)
                pairs.emplace(used[i], used[j]);
    }
    for (int col : palette) pairs.emplace(col, col);
    for (const auto& [alpha, beta] : pairs) {
        Violation viol;
        if (find_pair_cycle(g, c, alpha, beta, viol)) {
            report.violations.push_back(std::move(viol));
            report.acyclic = false;
        }
    }
    return report;
}

int chi_a_lower_bound(const Graph& g) {
    int delta = g.max_degree();
    if (delta == 2 && g.has_cycle()) return 3;
    return delta;
}

std::string verify_report_to_json(const VerifyReport& r) {
    nlohmann::json doc;
    doc["proper"] = r.proper;
    doc["acyclic"] = r.acyclic;
    doc["colors_used"] = r.colors_used;
    auto viols = nlohmann::json::array();
    for (const auto& v : r.violations) {
        nlohmann::json item;
        item["kind"] = v.kind == Violation::Kind::clash ? "clash" : "bichromatic_cycle";
        item["vertices"] = v.vertices;
        item["edges"] = v.edges;
        viols.push_back(item);
    }
    doc["violations"] = viols;
    return doc.dump();
}

}  // namespace chromata
