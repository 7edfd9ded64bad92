#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chromata/embedding.hpp"
#include "chromata/rational.hpp"

namespace chromata {

/// Inclusive degree interval; hi < 0 means unbounded ("k+").
struct DegreeRange {
    int lo = 0;
    int hi = -1;
    bool contains(int d) const { return d >= lo && (hi < 0 || d <= hi); }
    std::string str() const;
    static DegreeRange parse(const std::string& text);
};

/// Neighbor-degree profile of a 4-vertex, the condition R1-R3 hang on.
/// Encoded disjointly so rule matching stays deterministic: adj5minus wins
/// over adj6 when both would read true.
enum class SenderCtx { any, adj5minus, adj6, no_adj6minus };

enum class FaceSel { triangle, four_plus, any_face };

/// Which faces count as "incident with wu" for the R1/R2 split.
enum class EdgeIncidence { any, with_special_edge, without_special_edge };

/// One predicate-guarded transfer row: sender vertex -> incident face.
struct DischargeRule {
    std::string id;
    DegreeRange sender;
    SenderCtx ctx = SenderCtx::any;
    FaceSel face = FaceSel::any_face;
    DegreeRange other_a;  // triangle only: the other two boundary degrees,
    DegreeRange other_b;  // matched as an unordered pair
    SenderCtx other4_ctx = SenderCtx::any;  // ctx of the face's 4-vertex, for the (4,9+,9+) rows
    EdgeIncidence incidence = EdgeIncidence::any;
    Rational amount;
    std::string anchor;
};

class DischargeRuleSet {
public:
    std::vector<DischargeRule> rules;

    /// The built-in transfer rules: the three 4-vertex sends, the two
    /// 4+-face sends, and the full 3-face table.
    static DischargeRuleSet builtin();

    /// Line-oriented DSL:
    ///   sender: <range> [adj5- | adj6 | noadj6-] ; face: 3(<range>,<range>)
    ///   [other4:<ctx>] | 4+ | any [edge:with|without] ; amount: <p/q> ;
    ///   anchor: <text>
    /// Blank lines and lines starting with '#' are skipped.
    static DischargeRuleSet from_dsl(const std::string& text);
    std::string to_dsl() const;

    /// All rule indices matching the (sender vertex, face) incidence.
    std::vector<std::size_t> matching(const PlaneEmbedding& e, int v,
                                      const PlaneEmbedding::Face& f) const;

    /// Transfer amount for an abstract query (no embedding): sender degree,
    /// optional triangle signature of the other two vertices, contexts.
    /// Returns 0 when no row matches; throws AmbiguousRuleMatch otherwise.
    Rational query(int sender_degree, std::optional<std::pair<int, int>> tri_others,
                   SenderCtx ctx = SenderCtx::any, SenderCtx other4 = SenderCtx::any,
                   EdgeIncidence incidence = EdgeIncidence::any) const;
};

struct ChargeState {
    std::vector<Rational> vertex_charge;
    std::vector<Rational> face_charge;
    Rational total() const;
};

/// 2 deg(v) - 6 per vertex, deg(f) - 6 per face; total is -12 on a connected
/// sphere embedding. Throws DisconnectedInput when the embedding has more
/// than one component (audit per component instead).
ChargeState initial_charges(const PlaneEmbedding& e);

/// Same formula with no connectivity requirement (total -12 per component).
ChargeState formula_charges(const PlaneEmbedding& e);

struct FiredRule {
    int vertex = 0;
    int face = 0;
    std::size_t rule_index = 0;
    Rational amount;
};

struct ApplyResult {
    ChargeState final_state;
    std::vector<FiredRule> trace;
};

/// final = initial + transfers; exactly conservative. Incidences matching no
/// row transfer nothing; two matching rows raise AmbiguousRuleMatch naming
/// both anchors.
ApplyResult apply_rules(const PlaneEmbedding& e, const DischargeRuleSet& rules);

struct IdentityCheck {
    std::string id;
    Rational lhs;
    Rational rhs;
    std::string relation;  // "=", ">=", ">"
    bool pass = false;
};

/// Exact-rational replay of every closed-form final-charge line.
std::vector<IdentityCheck> verify_identities();

struct NegativeEntry {
    bool is_vertex = false;
    int element = 0;
    Rational final_charge;
    std::vector<FiredRule> fired;
};

struct AuditReport {
    Rational total_initial;
    Rational total_final;
    int components = 0;
    std::vector<NegativeEntry> negatives;
    std::vector<IdentityCheck> identity_checks;
};

/// Full charge audit of one embedding: initial charges, rule application,
/// negative-element listing, and the identity replay.
AuditReport audit_embedding(const PlaneEmbedding& e, const DischargeRuleSet& rules,
                            bool include_identities = true);

const char* sender_ctx_name(SenderCtx ctx);

}  // namespace chromata
