#include <doctest.h>

#include <algorithm>

#include "chromata/coloring.hpp"
#include "chromata/errors.hpp"
#include "chromata/exact.hpp"
#include "chromata/lemma.hpp"
#include "chromata/small_graphs.hpp"
#include "chromata/verify.hpp"
#include "common/fixtures.hpp"

using namespace chromata;

TEST_CASE("K3 is Delta-deletion-minimal; trees never are") {
    std::vector<Graph> catalog = all_graphs_up_to(4);
    auto at_delta = [](const Graph& g) { return g.max_degree(); };
    FindMinimalResult found = find_deletion_minimal(catalog, at_delta);
    bool k3_found = false;
    for (const auto& cert : found.certificates) {
        if (cert.graph.vertex_count() == 3 && cert.graph.edge_count() == 3) k3_found = true;
        // trees are Delta-colorable, so anything found contains a cycle
        CHECK(cert.graph.has_cycle());
    }
    CHECK(k3_found);
}

TEST_CASE("certificates replay deterministically through the exact engine") {
    std::vector<Graph> catalog = all_graphs_up_to(5);
    FindMinimalResult found =
        find_deletion_minimal(catalog, [](const Graph& g) { return g.max_degree(); });
    REQUIRE(!found.certificates.empty());
    for (const auto& cert : found.certificates) {
        CHECK(acyclic_colorable(cert.graph, cert.kappa).status == Decision::no);
        CHECK(cert.deletions.size() == static_cast<std::size_t>(cert.graph.edge_count()));
        for (const auto& ev : cert.deletions) {
            Graph sub = cert.graph.without_edge(ev.edge);
            EdgeColoring c(sub, cert.kappa);
            for (int e = 0; e < sub.edge_count(); ++e)
                c.assign(e, ev.coloring[static_cast<std::size_t>(e)]);
            CHECK(verify(sub, c).ok());
        }
    }
}

TEST_CASE("delta2 holds on every small deletion-minimal graph") {
    std::vector<Graph> catalog = all_graphs_up_to(5);
    for (int extra : {0, 1}) {
        auto rule = [extra](const Graph& g) { return g.max_degree() + extra; };
        FindMinimalResult found = find_deletion_minimal(catalog, rule);
        for (const auto& cert : found.certificates) {
            LemmaVerdict v = check_lemma("delta2", cert.graph, cert.kappa);
            CHECK(v.applicable);
            CHECK_MESSAGE(v.holds, "graph n=", cert.graph.vertex_count(),
                          " m=", cert.graph.edge_count(), ": ", v.witness);
        }
    }
}

TEST_CASE("lemma side conditions gate applicability") {
    Graph k3 = fixtures::complete(3);
    // kappa = Delta = 2: the kappa >= Delta+2 lemmas do not apply.
    CHECK_FALSE(check_lemma("2++edge", k3, 2).applicable);
    CHECK_FALSE(check_lemma("3+vertex", k3, 2).applicable);
    CHECK_FALSE(check_lemma("5Sum", k3, 2).applicable);
    // delta2 applies and holds on K3.
    LemmaVerdict v = check_lemma("delta2", k3, 2);
    CHECK(v.applicable);
    CHECK(v.holds);
    // kappa-minimal lemmas carry the caveat flag.
    CHECK(check_lemma("2InTriangle", k3, 3).minor_minimal_caveat);
    CHECK(check_lemma("3++edge", k3, 4).minor_minimal_caveat);
}

TEST_CASE("vacuous holds are flagged vacuous") {
    // No 3-vertices at all: 3+vertex holds vacuously.
    Graph c4 = fixtures::cycle(4);
    LemmaVerdict v = check_lemma("3+vertex", c4, c4.max_degree() + 2);
    CHECK(v.applicable);
    CHECK(v.holds);
    CHECK(v.vacuous);
}

TEST_CASE("lemma predicates can fail on graphs that are not minimal") {
    // A path has min degree 1 and a cut vertex: delta2 must fail.
    LemmaVerdict v = check_lemma("delta2", fixtures::path(4), 2);
    CHECK(v.applicable);
    CHECK_FALSE(v.holds);
    CHECK(!v.witness.empty());

    // A star's 2-vertex... K1,2 has a 2-vertex whose neighbors have degree 1:
    // 2++edge fails loudly at kappa = Delta + 2.
    Graph k12 = fixtures::star(2);
    LemmaVerdict w = check_lemma("2++edge", k12, k12.max_degree() + 2);
    CHECK(w.applicable);
    CHECK_FALSE(w.holds);
}

TEST_CASE("unknown lemma ids throw") {
    CHECK_THROWS_AS(check_lemma("nope", fixtures::complete(3), 3), UnknownLemmaId);
    CHECK(lemma_ids().size() == 10);
}

TEST_CASE("check_fact2 on a deletion-minimal instance") {
    // K3 at kappa = 2: coloring P3 with colors 1,2 is acyclic; Fact 2 says no
    // candidate for the removed edge is valid and the degree relations hold.
    Graph k3 = fixtures::complete(3);
    for (int e = 0; e < 3; ++e) {
        Graph sub = k3.without_edge(e);
        DecisionResult d = acyclic_colorable(sub, 2);
        REQUIRE(d.status == Decision::yes);
        std::vector<int> phi;
        for (int f = 0; f < sub.edge_count(); ++f) phi.push_back(d.certificate->color(f));
        Fact2Verdict v = check_fact2(k3, 2, e, phi);
        CHECK(v.precondition_ok);
        CHECK_MESSAGE(v.holds(), v.detail);
    }
}

TEST_CASE("check_fact2 rejects bad preconditions") {
    Graph k3 = fixtures::complete(3);
    Fact2Verdict v = check_fact2(k3, 2, 0, {1, 1});  // improper on g - uv
    CHECK_FALSE(v.precondition_ok);
    Fact2Verdict w = check_fact2(k3, 2, 0, {1});  // wrong length
    CHECK_FALSE(w.precondition_ok);
}

TEST_CASE("fact2 holds across every certificate found at n <= 5") {
    std::vector<Graph> catalog = all_graphs_up_to(5);
    for (int extra : {0, 1}) {
        auto rule = [extra](const Graph& g) { return g.max_degree() + extra; };
        FindMinimalResult found = find_deletion_minimal(catalog, rule);
        for (const auto& cert : found.certificates) {
            for (const auto& ev : cert.deletions) {
                Fact2Verdict v = check_fact2(cert.graph, cert.kappa, ev.edge, ev.coloring);
                CHECK_MESSAGE(v.holds(), "n=", cert.graph.vertex_count(),
                              " kappa=", cert.kappa, ": ", v.detail);
            }
        }
    }
}

TEST_CASE("fact 1 uniqueness bridges onto every certificate coloring") {
    std::vector<Graph> catalog = all_graphs_up_to(5);
    FindMinimalResult found =
        find_deletion_minimal(catalog, [](const Graph& g) { return g.max_degree() + 1; });
    int walked = 0;
    for (const auto& cert : found.certificates) {
        for (const auto& ev : cert.deletions) {
            Graph sub = cert.graph.without_edge(ev.edge);
            EdgeColoring c(sub, cert.kappa);
            for (int e = 0; e < sub.edge_count(); ++e)
                c.assign(e, ev.coloring[static_cast<std::size_t>(e)]);
            for (int alpha = 1; alpha <= cert.kappa; ++alpha)
                for (int beta = alpha + 1; beta <= cert.kappa; ++beta)
                    for (int v = 0; v < sub.vertex_count(); ++v) {
                        DichromaticPath p = c.maximal_dichromatic_path(v, alpha, beta);
                        if (p.empty()) continue;
                        std::vector<int> base = p.edges;
                        std::sort(base.begin(), base.end());
                        for (int u : p.vertices) {
                            DichromaticPath q = c.maximal_dichromatic_path(u, alpha, beta);
                            std::vector<int> es = q.edges;
                            std::sort(es.begin(), es.end());
                            CHECK(es == base);
                            CHECK(q.is_cycle == p.is_cycle);
                        }
                        ++walked;
                    }
        }
    }
    CHECK(walked > 50);
}

TEST_CASE("graphs with isolated vertices are never certified") {
    Graph padded(4, {{0, 1}, {1, 2}, {2, 0}});  // K3 plus an isolate
    FindMinimalResult found =
        find_deletion_minimal({padded}, [](const Graph& g) { return g.max_degree(); });
    CHECK(found.certificates.empty());
}
