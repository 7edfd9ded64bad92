#pragma once

#include <string>
#include <vector>

#include "chromata/coloring.hpp"
#include "chromata/graph.hpp"

namespace chromata {

struct Violation {
    enum class Kind { clash, bichromatic_cycle };
    Kind kind = Kind::clash;
    /// clash: the shared vertex then the two edges; cycle: the vertex cycle
    /// followed by its edges.
    std::vector<int> vertices;
    std::vector<int> edges;
};

struct VerifyReport {
    bool proper = false;
    bool acyclic = false;
    std::vector<Violation> violations;
    int colors_used = 0;

    bool ok() const { return proper && acyclic; }
};

struct VerifyOptions {
    /// When set, an incompletely colored input is fine and only the colored
    /// subgraph is checked. Otherwise a partial coloring is a usage error.
    bool allow_partial = false;
};

/// Proper + acyclic check: no incident equal colors, and for every color
/// pair present at a shared vertex the two-color subgraph is a linear
/// forest. Read-only; throws PaletteExceeded if a color exceeds kappa.
VerifyReport verify(const Graph& g, const EdgeColoring& c, VerifyOptions opts = {});

/// Delta(g), plus 1 when Delta = 2 and g contains a cycle (a 2-colored
/// cycle is always bichromatic).
int chi_a_lower_bound(const Graph& g);

std::string verify_report_to_json(const VerifyReport& r);

}  // namespace chromata
