#include "chromata/solver.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <set>

#include "chromata/errors.hpp"
#include "chromata/prng.hpp"
#include "chromata/verify.hpp"

namespace chromata {

namespace {

// Peel minimum-degree vertices (lowest id on ties); edges keyed by the peel
// time of their earlier-peeled endpoint, core edges first. Low-degree
// vertices therefore get their edges colored last, where freedom is scarce.
std::vector<int> edge_order_smallest_last(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<char> gone(static_cast<std::size_t>(n), 0);
    std::vector<int> peel_time(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[static_cast<std::size_t>(v)]) continue;
            if (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)])
                best = v;
        }
        gone[static_cast<std::size_t>(best)] = 1;
        peel_time[static_cast<std::size_t>(best)] = step;
        for (int w : g.neighbors(best))
            if (!gone[static_cast<std::size_t>(w)]) deg[static_cast<std::size_t>(w)]--;
    }
    std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) order[static_cast<std::size_t>(e)] = e;
    auto key = [&](int e) {
        auto [u, v] = g.edge(e);
        return std::min(peel_time[static_cast<std::size_t>(u)], peel_time[static_cast<std::size_t>(v)]);
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ka = key(a), kb = key(b);
        if (ka != kb) return ka > kb;  // core (late-peeled) edges first
        return a < b;
    });
    return order;
}

struct Attempt {
    const Graph& g;
    int kappa;
    const SolveConfig& cfg;
    std::mt19937_64 rng;
    EdgeColoring coloring;
    SolveStats stats;

    Attempt(const Graph& graph, int k, const SolveConfig& config, std::uint64_t attempt_seed)
        : g(graph), kappa(k), cfg(config), rng(attempt_seed), coloring(graph, k) {}

    std::vector<int> make_order(int restart_index) {
        std::vector<int> order;
        switch (cfg.order) {
            case EdgeOrderPolicy::smallest_last:
                order = edge_order_smallest_last(g);
                break;
            case EdgeOrderPolicy::input:
            case EdgeOrderPolicy::random:
                order.resize(static_cast<std::size_t>(g.edge_count()));
                for (int e = 0; e < g.edge_count(); ++e) order[static_cast<std::size_t>(e)] = e;
                break;
        }
        bool shuffle = cfg.order == EdgeOrderPolicy::random || restart_index > 0;
        if (shuffle && order.size() > 1) {
            for (std::size_t i = order.size() - 1; i > 0; --i) {
                std::size_t j = static_cast<std::size_t>(draw_below(rng, i + 1));
                std::swap(order[i], order[j]);
            }
        }
        return order;
    }

    // Colors already seen around both endpoints make future intersections;
    // prefer the scarcest, then the lowest.
    int pick_color(int e, const std::vector<int>& valid) {
        auto [u, v] = g.edge(e);
        int best = -1, best_score = 0;
        for (int c : valid) {
            int score = 0;
            for (int w : g.neighbors(u))
                if (coloring.vertex_has_color(w, c)) ++score;
            for (int w : g.neighbors(v))
                if (coloring.vertex_has_color(w, c)) ++score;
            if (best < 0 || score < best_score) {
                best = c;
                best_score = score;
            }
        }
        return best;
    }

    std::vector<int> valid_colors(int e) {
        std::vector<int> out;
        for (int c : coloring.candidate_colors(e))
            if (coloring.is_valid(e, c)) out.push_back(c);
        return out;
    }

    // A swap may re-route cycles through the recolored edges; scan the pairs
    // that occur on the path's vertices and reject the move if any closed.
    bool swap_kept_partial_acyclic(const DichromaticPath& p) {
        std::set<std::pair<int, int>> pairs;
        for (int x : p.vertices) {
            std::vector<int> used = coloring.used_colors(x);
            for (int a : used)
                for (int b : used)
                    if (a < b && (a == p.alpha || a == p.beta || b == p.alpha || b == p.beta))
                        pairs.emplace(a, b);
        }
        for (const auto& [a, b] : pairs) {
            for (int x : p.vertices) {
                DichromaticPath q = coloring.maximal_dichromatic_path(x, a, b);
                if (q.is_cycle) return false;
            }
        }
        return true;
    }

    // Kempe recovery: a candidate alpha blocked by a (beta,alpha) critical
    // path gets that path swapped at the far endpoint; keep the swap if the
    // partial coloring stays acyclic and some candidate turned valid.
    bool try_kempe(int e) {
        auto [u, v] = g.edge(e);
        std::vector<int> commons;
        for (int c : coloring.used_colors(u))
            if (coloring.vertex_has_color(v, c)) commons.push_back(c);
        for (int alpha : coloring.candidate_colors(e)) {
            for (int beta : commons) {
                if (!coloring.has_critical_path(beta, alpha, u, v)) continue;
                DichromaticPath p = coloring.maximal_dichromatic_path(v, beta, alpha);
                if (p.empty() || p.is_cycle) continue;
                coloring.swap_path(p);
                ++stats.swaps;
                if (swap_kept_partial_acyclic(p)) {
                    std::vector<int> valid = valid_colors(e);
                    if (!valid.empty()) {
                        coloring.assign(e, pick_color(e, valid));
                        ++stats.assignments;
                        return true;
                    }
                }
                coloring.swap_path(p);  // involution: undo
                ++stats.swaps;
            }
        }
        return false;
    }

    // Uncolor the incident colored edge with the fewest alternatives and put
    // it back on the worklist.
    int pick_uncolor_victim(int e) {
        auto [u, v] = g.edge(e);
        int victim = -1;
        std::size_t victim_alts = 0;
        std::vector<int> incident_edges;
        for (const auto& [w, f] : g.incident(u)) {
            (void)w;
            if (coloring.colored(f)) incident_edges.push_back(f);
        }
        for (const auto& [w, f] : g.incident(v)) {
            (void)w;
            if (coloring.colored(f)) incident_edges.push_back(f);
        }
        std::sort(incident_edges.begin(), incident_edges.end());
        incident_edges.erase(std::unique(incident_edges.begin(), incident_edges.end()),
                             incident_edges.end());
        for (int f : incident_edges) {
            int saved = coloring.color(f);
            coloring.unassign(f);
            std::size_t alts = valid_colors(f).size();
            coloring.assign(f, saved);
            if (victim < 0 || alts < victim_alts) {
                victim = f;
                victim_alts = alts;
            }
        }
        return victim;
    }

    bool run(int restart_index) {
        std::vector<int> order = make_order(restart_index);
        std::vector<int> pos(static_cast<std::size_t>(g.edge_count()), 0);
        for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

        std::set<int> pending;
        for (std::size_t i = 0; i < order.size(); ++i) pending.insert(static_cast<int>(i));
        std::vector<int> dead_ends(static_cast<std::size_t>(g.edge_count()), 0);
        long long move_cap =
            4LL * (cfg.max_moves_per_edge + 1) * (g.edge_count() + 1);

        while (!pending.empty()) {
            if (--move_cap < 0) return false;
            int e = order[static_cast<std::size_t>(*pending.begin())];
            std::vector<int> valid = valid_colors(e);
            if (!valid.empty()) {
                coloring.assign(e, pick_color(e, valid));
                ++stats.assignments;
                pending.erase(pending.begin());
                continue;
            }
            if (++dead_ends[static_cast<std::size_t>(e)] > cfg.max_moves_per_edge) return false;
            if (try_kempe(e)) {
                pending.erase(pending.begin());
                continue;
            }
            int victim = pick_uncolor_victim(e);
            if (victim < 0) return false;  // no candidates at all and nothing to undo
            coloring.unassign(victim);
            ++stats.uncolor_moves;
            pending.insert(pos[static_cast<std::size_t>(victim)]);
        }
        return true;
    }
};

SolveOutcome run_attempt(const Graph& g, int kappa, const SolveConfig& cfg, int restart_index) {
    Attempt attempt(g, kappa, cfg, splitmix64(cfg.seed + 0x9e3779b97f4a7c15ULL *
                                                             static_cast<std::uint64_t>(restart_index)));
    SolveOutcome outcome;
    if (attempt.run(restart_index)) {
        outcome.status = SolveOutcome::Status::solved;
        outcome.coloring = std::move(attempt.coloring);
    }
    outcome.stats = attempt.stats;
    return outcome;
}

}  // namespace

std::vector<int> smallest_last_edge_order(const Graph& g) { return edge_order_smallest_last(g); }

SolveOutcome solve(const Graph& g, SolveConfig cfg) {
    auto t0 = std::chrono::steady_clock::now();
    if (cfg.kappa < 0) cfg.kappa = g.max_degree() + 6;
    int lower = chi_a_lower_bound(g);
    if (cfg.kappa < lower)
        throw InfeasiblePalette("solve: kappa " + std::to_string(cfg.kappa) +
                                " below lower bound " + std::to_string(lower));
    if (cfg.max_restarts < 1 || cfg.max_moves_per_edge < 1)
        throw InvalidParam("solve: bounds must be at least 1");

    SolveOutcome result;
    int attempts = cfg.max_restarts;
    int threads = std::max(1, cfg.threads);
    int solved_at = -1;
    for (int base = 0; base < attempts && solved_at < 0; base += threads) {
        int wave = std::min(threads, attempts - base);
        std::vector<std::future<SolveOutcome>> futures;
        for (int i = 1; i < wave; ++i)
            futures.push_back(std::async(std::launch::async, run_attempt, std::cref(g), cfg.kappa,
                                         std::cref(cfg), base + i));
        std::vector<SolveOutcome> wave_results;
        wave_results.push_back(run_attempt(g, cfg.kappa, cfg, base));
        for (auto& f : futures) wave_results.push_back(f.get());
        for (int i = 0; i < wave; ++i) {
            auto& r = wave_results[static_cast<std::size_t>(i)];
            // Stats accumulate exactly as a sequential scan would, stopping
            // at the first success, so worker count cannot change them.
            result.stats.assignments += r.stats.assignments;
            result.stats.swaps += r.stats.swaps;
            result.stats.uncolor_moves += r.stats.uncolor_moves;
            result.stats.restarts = base + i;
            if (r.solved()) {
                solved_at = base + i;
                result.status = SolveOutcome::Status::solved;
                result.coloring = std::move(r.coloring);
                break;
            }
        }
    }

    if (result.solved()) {
        VerifyReport report = verify(g, *result.coloring);
        if (!report.ok())
            throw std::logic_error("solve: produced coloring failed verification");
    }
    result.stats.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

std::pair<int, SolveOutcome> solve_minimize(const Graph& g, SolveConfig cfg) {
    if (cfg.kappa < 0) cfg.kappa = g.max_degree() + 6;
    int lower = chi_a_lower_bound(g);
    cfg.kappa = std::max(cfg.kappa, lower);
    SolveOutcome best;
    int best_kappa = -1;
    for (int kappa = cfg.kappa; kappa >= lower; --kappa) {
        SolveConfig step = cfg;
        step.kappa = kappa;
        SolveOutcome outcome = solve(g, step);
        if (!outcome.solved()) break;
        best = std::move(outcome);
        best_kappa = kappa;
    }
    return {best_kappa, std::move(best)};
}

}  // namespace chromata
