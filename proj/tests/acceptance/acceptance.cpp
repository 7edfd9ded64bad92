// Acceptance suite: every criterion prints exactly one PASS/FAIL line and
// the binary exits nonzero if anything failed. Tolerances and thresholds are
// pinned here, in code.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "chromata/discharge.hpp"
#include "chromata/embedding.hpp"
#include "chromata/exact.hpp"
#include "chromata/graph_io.hpp"
#include "chromata/lemma.hpp"
#include "chromata/prng.hpp"
#include "chromata/random_planar.hpp"
#include "chromata/small_graphs.hpp"
#include "chromata/solver.hpp"
#include "chromata/verify.hpp"
#include "chromata/vertex_cases.hpp"
#include "common/fixtures.hpp"
#include "common/oracles.hpp"

using namespace chromata;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail
              << std::endl;
    if (!pass) ++failures;
}

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

// --- criterion 1: Delta+6 on 200 random planar graphs ---------------------
void criterion1() {
    const std::array<Rational, 3> probs{Rational(1), Rational(7, 10), Rational(1, 2)};
    int solved = 0, verified = 0, returned = 0;
    double worst_time = 0;
    std::vector<std::string> exhausted_log;
    for (int i = 0; i < 200; ++i) {
        int n = 20 + (i * 180) / 199;  // spreads 20..200
        Rational prob = probs[static_cast<std::size_t>(i) % 3];
        Graph g = random_planar(n, prob, 1000 + static_cast<std::uint64_t>(i));
        SolveConfig cfg;  // kappa defaults to Delta + 6
        cfg.seed = static_cast<std::uint64_t>(i);
        auto t0 = clock_type::now();
        SolveOutcome out = solve(g, cfg);
        double dt = seconds_since(t0);
        worst_time = std::max(worst_time, dt);
        if (out.solved() && dt <= 10.0) {
            ++solved;
            ++returned;
            VerifyReport r = verify(g, *out.coloring);
            if (r.ok() && r.colors_used <= g.max_degree() + 6) ++verified;
        } else if (out.solved()) {
            ++returned;  // solved but over budget: logged, excluded from the 95% count
            VerifyReport r = verify(g, *out.coloring);
            if (r.ok() && r.colors_used <= g.max_degree() + 6) ++verified;
            exhausted_log.push_back("graph " + std::to_string(i) + " over time budget");
        } else {
            exhausted_log.push_back("graph " + std::to_string(i) + " exhausted");
        }
    }
    for (const auto& line : exhausted_log) std::cerr << "  [criterion1] " << line << "\n";
    bool pass = solved >= 190 && verified == returned;
    std::ostringstream detail;
    detail << "Delta+6 solved " << solved << "/200 within 10 s (worst " << worst_time
           << " s), verified " << verified << "/" << returned << " returned colorings";
    report(1, pass, detail.str());
}

// --- criterion 2: decision engine vs naive enumeration, m <= 8 ------------
void criterion2() {
    auto t0 = clock_type::now();
    int disagreements = 0, compared = 0;
    for (const Graph& g : connected_graphs_by_edges(8)) {
        int delta = g.max_degree();
        for (int kappa : {delta, delta + 1, delta + 2}) {
            bool mine = acyclic_colorable(g, kappa).status == Decision::yes;
            bool naive = oracles::pruned_enumeration_decides_yes(g, kappa);
            if (mine != naive) ++disagreements;
            ++compared;
        }
    }
    double dt = seconds_since(t0);
    bool pass = disagreements == 0 && dt < 300.0;
    std::ostringstream detail;
    detail << compared << " decisions on the full m<=8 connected catalog, " << disagreements
           << " disagreements, " << dt << " s";
    report(2, pass, detail.str());
}

// --- criterion 3: conjecture probe on connected planar n <= 8 -------------
void criterion3() {
    auto t0 = clock_type::now();
    int checked = 0;
    std::string violation;
    for (const Graph& g : connected_planar_up_to(8)) {
        if (g.edge_count() == 0) continue;
        ExactResult r = chi_a_exact(g);
        ++checked;
        if (r.chi_a > g.max_degree() + 2) {
            violation = "chi_a " + std::to_string(r.chi_a) + " > Delta+2 on " + to_graph6(g);
            break;
        }
    }
    bool pass = violation.empty();
    std::ostringstream detail;
    if (pass)
        detail << "chi_a <= Delta+2 on all " << checked << " connected planar graphs with n <= 8 ("
               << seconds_since(t0) << " s)";
    else
        detail << "RESEARCH EVENT: " << violation;
    report(3, pass, detail.str());
    if (!pass) {
        std::cout << "aborting: a Conjecture 1 violation must be investigated" << std::endl;
        std::exit(3);
    }
}

// --- criterion 4: Fact 1 uniqueness, 1000 randomized trials ----------------
void criterion4() {
    std::mt19937_64 rng(2024);
    int trials = 0, okay = 0;
    while (trials < 1000) {
        int n = 6 + static_cast<int>(draw_below(rng, 25));  // 6..30
        Graph g = random_planar(n, Rational(4, 5), rng());
        if (g.edge_count() < 2) continue;
        int kappa = g.max_degree() + 1 + static_cast<int>(draw_below(rng, 6));
        EdgeColoring c(g, kappa);
        // build a random partial acyclic coloring greedily
        for (int e = 0; e < g.edge_count(); ++e) {
            if (draw_below(rng, 10) < 3) continue;  // leave ~30% uncolored
            std::vector<int> valid;
            for (int cand : c.candidate_colors(e))
                if (c.is_valid(e, cand)) valid.push_back(cand);
            if (valid.empty()) continue;
            c.assign(e, valid[draw_below(rng, valid.size())]);
        }
        if (c.colored_count() == 0) continue;
        // pick a colored edge; alpha = its color, beta random distinct
        int e = -1;
        for (int tries = 0; tries < 50 && e < 0; ++tries) {
            int cand = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(g.edge_count())));
            if (c.colored(cand)) e = cand;
        }
        if (e < 0) continue;
        int alpha = c.color(e);
        int beta = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(kappa)));
        if (beta == alpha) beta = beta % kappa + 1;
        if (beta == alpha) continue;
        int v = draw_below(rng, 2) ? g.edge(e).first : g.edge(e).second;

        DichromaticPath p = c.maximal_dichromatic_path(v, alpha, beta);
        ++trials;
        if (p.empty()) {
            ++okay;  // vertex off both colors; uniqueness is vacuous
            continue;
        }
        std::vector<int> base = p.edges;
        std::sort(base.begin(), base.end());
        bool all_match = true;
        for (int u : p.vertices) {
            DichromaticPath q = c.maximal_dichromatic_path(u, alpha, beta);
            std::vector<int> es = q.edges;
            std::sort(es.begin(), es.end());
            if (es != base || q.is_cycle != p.is_cycle) all_match = false;
        }
        if (all_match) ++okay;
    }
    report(4, okay == 1000, "maximal dichromatic path uniqueness held in " +
                                std::to_string(okay) + "/1000 trials");
}

// --- criterion 5: the discharging identities -------------------------------
void criterion5() {
    auto t0 = clock_type::now();
    auto checks = verify_identities();
    int failed = 0;
    for (const auto& c : checks)
        if (!c.pass) ++failed;
    double dt = seconds_since(t0);
    bool pass = failed == 0 && checks.size() >= 30 && dt < 1.0;
    std::ostringstream detail;
    detail << checks.size() << " exact-rational identities, " << failed << " failures, " << dt
           << " s";
    report(5, pass, detail.str());
}

// --- criterion 6: Euler identity -------------------------------------------
void criterion6() {
    int bad = 0, checked = 0;
    auto check_graph = [&](const Graph& g) {
        auto result = embed_planar(g);
        auto* emb = std::get_if<PlaneEmbedding>(&result);
        if (!emb) {
            ++bad;
            return;
        }
        ChargeState charges = formula_charges(*emb);
        Rational expect = Rational(-12) * Rational(static_cast<int>(emb->component_vertices.size()));
        if (charges.total() != expect) ++bad;
        ++checked;
    };
    check_graph(fixtures::complete(4));
    check_graph(fixtures::cube_q3());
    check_graph(fixtures::dodecahedron());
    check_graph(fixtures::icosahedron());
    std::array<Rational, 3> probs{Rational(1), Rational(7, 10), Rational(1, 2)};
    for (int i = 0; i < 100; ++i) {
        Graph g = random_planar(10 + (i % 60), probs[static_cast<std::size_t>(i) % 3],
                                7000 + static_cast<std::uint64_t>(i));
        if (g.vertex_count() == 0) continue;
        check_graph(g);
    }
    report(6, bad == 0,
           "initial charges total -12 per component on " + std::to_string(checked) +
               " embeddings (4 solids + random planar), zero tolerance");
}

// --- criterion 7: vertex-case enumeration ----------------------------------
void criterion7() {
    auto t0 = clock_type::now();
    bool pass = true;
    std::string worst;
    try {
        auto reports = enumerate_vertex_cases(3, 14);
        for (const auto& rep : reports) {
            if (rep.min_final_charge.negative()) {
                pass = false;
                worst = "degree " + std::to_string(rep.degree) + " min " +
                        rep.min_final_charge.str();
            }
        }
    } catch (const std::exception& e) {
        pass = false;
        worst = e.what();
    }
    double dt = seconds_since(t0);
    pass = pass && dt < 60.0;
    std::ostringstream detail;
    detail << "min final charge >= 0 for every degree 3..14 under the builtin catalog (" << dt
           << " s)";
    if (!worst.empty()) detail << " [" << worst << "]";
    report(7, pass, detail.str());
}

// --- criterion 8: deletion-minimal hunt + lemma suite -----------------------
void criterion8() {
    std::vector<Graph> catalog = all_graphs_up_to(7);
    bool pass = true;
    std::ostringstream detail;
    for (int extra : {0, 1}) {
        auto rule = [extra](const Graph& g) { return g.max_degree() + extra; };
        FindMinimalOptions opts;
        opts.budget_per_graph = 5000000;
        FindMinimalResult found = find_deletion_minimal(catalog, rule, opts);
        if (!found.skipped.empty()) pass = false;
        int lemma_failures = 0;
        for (const auto& cert : found.certificates) {
            for (const auto& id : lemma_ids()) {
                LemmaVerdict v = check_lemma(id, cert.graph, cert.kappa);
                if (v.applicable && !v.holds) {
                    ++lemma_failures;
                    std::cerr << "  [criterion8] lemma " << id << " failed on "
                              << to_graph6(cert.graph) << " at kappa " << cert.kappa << ": "
                              << v.witness << "\n";
                }
            }
            for (const auto& ev : cert.deletions) {
                Fact2Verdict f2 = check_fact2(cert.graph, cert.kappa, ev.edge, ev.coloring);
                if (!f2.holds()) {
                    ++lemma_failures;
                    std::cerr << "  [criterion8] Fact 2 failed on " << to_graph6(cert.graph)
                              << ": " << f2.detail << "\n";
                }
            }
        }
        if (extra == 0 && found.certificates.empty()) pass = false;  // odd cycles must appear
        if (lemma_failures) pass = false;
        detail << "kappa=Delta" << (extra ? "+1" : "") << ": " << found.certificates.size()
               << " certificates"
               << (found.certificates.empty() ? " (explicitly: none found)" : "") << ", "
               << lemma_failures << " lemma failures; ";
    }
    report(8, pass, detail.str() + "scanned " + std::to_string(catalog.size()) + " graphs");
}

// --- criterion 9: round-trip + byte-identical determinism -------------------
std::string run_cli(const std::string& bin, const std::string& args) {
    std::string cmd = bin + " " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) return {};
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe.get())) out.append(buf, got);
    return out;
}

void criterion9() {
    // 50-document corpus across the three formats: parse -> serialize ->
    // parse must be the identity.
    int roundtrip_bad = 0;
    std::array<GraphFormat, 3> formats{GraphFormat::graph6, GraphFormat::edge_list,
                                       GraphFormat::json};
    for (int i = 0; i < 50; ++i) {
        Graph g = random_planar(5 + (i % 26), i % 2 ? Rational(1) : Rational(3, 5),
                                9000 + static_cast<std::uint64_t>(i));
        GraphFormat fmt = formats[static_cast<std::size_t>(i) % 3];
        std::string s1 = serialize_graph(g, fmt);
        Graph h = parse_graph({fmt, s1});
        std::string s2 = serialize_graph(h, fmt);
        if (s1 != s2) ++roundtrip_bad;
        Graph h2 = parse_graph({fmt, s2});
        if (h2.edges() != h.edges() || h2.vertex_count() != h.vertex_count()) ++roundtrip_bad;
    }

    bool determinism_ok = true;
    std::string how;
    if (const char* bin = std::getenv("CHROMATA_BIN")) {
        how = "CLI binary";
        std::string a = run_cli(bin, "gen --n 40 --keep-prob 0.7 --seed 5");
        std::string b = run_cli(bin, "gen --n 40 --keep-prob 0.7 --seed 5");
        determinism_ok = determinism_ok && !a.empty() && a == b;
        // end-to-end: generate a graph file, color it twice with a fixed seed
        std::string tmp = "/tmp/chromata_accept_graph.json";
        {
            Graph g = random_planar(60, Rational(1), 31);
            std::string payload = to_graph_json(g);
            FILE* f = fopen(tmp.c_str(), "w");
            fwrite(payload.data(), 1, payload.size(), f);
            fclose(f);
        }
        std::string c1 = run_cli(bin, "color -i " + tmp + " --seed 42");
        std::string c2 = run_cli(bin, "color -i " + tmp + " --seed 42");
        determinism_ok = determinism_ok && !c1.empty() && c1 == c2;
        std::string audit1 = run_cli(bin, "audit -i " + tmp + " --cases");
        std::string audit2 = run_cli(bin, "audit -i " + tmp + " --cases");
        determinism_ok = determinism_ok && !audit1.empty() && audit1 == audit2;
    } else {
        how = "in-process (CHROMATA_BIN unset)";
        Graph g = random_planar(60, Rational(1), 31);
        SolveConfig cfg;
        cfg.seed = 42;
        SolveOutcome a = solve(g, cfg);
        SolveOutcome b = solve(g, cfg);
        determinism_ok = a.solved() && b.solved() &&
                         coloring_to_json(*a.coloring) == coloring_to_json(*b.coloring);
    }

    bool pass = roundtrip_bad == 0 && determinism_ok;
    std::ostringstream detail;
    detail << "50-file round-trip (" << roundtrip_bad << " bad), byte-identical outputs via "
           << how;
    report(9, pass, detail.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << std::endl;
    return failures == 0 ? 0 : 1;
}
