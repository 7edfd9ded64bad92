#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chromata/rational.hpp"

namespace chromata {

/// Worst-case final charge of one vertex class under the builtin derived
/// constraint catalog. A vertex of degree d (in the 2-stripped plane graph)
/// is modeled as a cyclic sequence of d neighbor degree classes with a
/// 3-face or 4+-face in each of the d slots between consecutive neighbors;
/// the enumeration maximizes the total sent charge over every configuration
/// the catalog admits.
struct VertexCaseResult {
    int degree = 0;
    std::string case_name;
    bool feasible = true;  // some admissible configuration exists
    Rational min_final_charge;
};

struct VertexCaseReport {
    int degree = 0;
    Rational min_final_charge;  // minimum over the degree's cases
    std::vector<VertexCaseResult> cases;
};

/// Enumerate degrees lo..hi (3 <= lo, hi <= 14). Throws
/// ConstraintCatalogIncomplete if an admissible configuration reaches a
/// 3-face signature with no transfer row.
std::vector<VertexCaseReport> enumerate_vertex_cases(int lo = 3, int hi = 14);

/// Same enumeration over the unmerged ten-class neighbor domain; slower,
/// used to cross-validate the per-case class merging.
std::vector<VertexCaseReport> enumerate_vertex_cases_full_domain(int lo = 3, int hi = 14);

/// Monotone closed form for degrees above the enumeration range:
/// 2d - 6 - d * (3/2) = d/2 - 6.
Rational closed_form_min_final(int degree);

}  // namespace chromata
