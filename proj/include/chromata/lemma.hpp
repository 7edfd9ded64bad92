#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chromata/coloring.hpp"
#include "chromata/graph.hpp"

namespace chromata {

/// Evidence that chi'_a(graph) > kappa while every single-edge deletion is
/// kappa-colorable. Single-edge deletions suffice: restricting an acyclic
/// edge coloring to a subgraph keeps it proper and acyclic, so chi'_a is
/// monotone under subgraphs and any proper subgraph embeds in some G - e.
/// Graphs with isolated vertices are rejected up front (G - v would already
/// tie chi'_a(G), so such a G is never deletion-minimal).
struct MinimalityCertificate {
    Graph graph;
    int kappa = 0;
    long long refutation_nodes = 0;  // node count of the "no" run on the graph
    struct EdgeEvidence {
        int edge = 0;
        std::vector<int> coloring;  // per edge id of graph-without-edge
    };
    std::vector<EdgeEvidence> deletions;
};

struct FindMinimalOptions {
    long long budget_per_graph = 0;  // nodes; <= 0 unlimited
};

struct FindMinimalResult {
    std::vector<MinimalityCertificate> certificates;
    std::vector<std::string> skipped;  // budget-exceeded graphs, logged not hidden
    int graphs_scanned = 0;
};

FindMinimalResult find_deletion_minimal(const std::vector<Graph>& catalog,
                                        const std::function<int(const Graph&)>& kappa_of,
                                        FindMinimalOptions opts = {});

struct LemmaVerdict {
    std::string lemma_id;
    bool applicable = false;  // side conditions (kappa vs Delta) met
    bool holds = true;        // meaningful only when applicable
    bool vacuous = true;      // no configuration matched the hypothesis
    bool minor_minimal_caveat = false;  // lemma stated for kappa-minimal graphs
    std::string witness;      // clause-level description on failure
};

/// Lemma ids: delta2, 2InTriangle, 2+edge, 2++edge, 3+vertex, 3++edge, L9,
/// 3-10vertex, 4Sum, 5Sum.
const std::vector<std::string>& lemma_ids();

/// Evaluate one structural lemma's statement on a graph believed to be
/// kappa-deletion-minimal (the caller owns that precondition; pair with a
/// MinimalityCertificate). Throws UnknownLemmaId.
LemmaVerdict check_lemma(const std::string& id, const Graph& g, int kappa);

struct Fact2Verdict {
    bool precondition_ok = false;
    bool no_valid_candidate = false;
    bool disjoint_clause = true;   // U(u) cap U(v) empty => deg sum = kappa+2
    bool sum_clause = true;        // deg(u)+deg(v)+sum_W deg >= kappa+2s+2
    bool holds() const { return precondition_ok && no_valid_candidate && disjoint_clause && sum_clause; }
    std::string detail;
};

/// Check both Fact 2 clauses for the edge uv of g, given an acyclic coloring
/// phi of g - uv (colors indexed by the edge ids of g.without_edge(edge)).
Fact2Verdict check_fact2(const Graph& g, int kappa, int edge, const std::vector<int>& phi);

}  // namespace chromata
