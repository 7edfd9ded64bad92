#include "chromata/discharge.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "chromata/errors.hpp"

namespace chromata {

std::string DegreeRange::str() const {
    if (hi < 0) return std::to_string(lo) + "+";
    if (hi == lo) return std::to_string(lo);
    return std::to_string(lo) + "-" + std::to_string(hi);
}

DegreeRange DegreeRange::parse(const std::string& text) {
    DegreeRange r;
    if (text.empty()) throw ParseError("degree range: empty");
    if (text.back() == '+') {
        r.lo = std::stoi(text.substr(0, text.size() - 1));
        r.hi = -1;
        return r;
    }
    auto dash = text.find('-');
    if (dash != std::string::npos) {
        r.lo = std::stoi(text.substr(0, dash));
        r.hi = std::stoi(text.substr(dash + 1));
        return r;
    }
    r.lo = r.hi = std::stoi(text);
    return r;
}

const char* sender_ctx_name(SenderCtx ctx) {
    switch (ctx) {
        case SenderCtx::any: return "any";
        case SenderCtx::adj5minus: return "adj5-";
        case SenderCtx::adj6: return "adj6";
        case SenderCtx::no_adj6minus: return "noadj6-";
    }
    return "?";
}

namespace {

SenderCtx ctx_from_name(const std::string& s) {
    if (s == "any") return SenderCtx::any;
    if (s == "adj5-") return SenderCtx::adj5minus;
    if (s == "adj6") return SenderCtx::adj6;
    if (s == "noadj6-") return SenderCtx::no_adj6minus;
    throw ParseError("rule DSL: unknown sender context '" + s + "'");
}

// The disjoint neighbor-profile classification behind R1-R3.
SenderCtx classify_ctx(const Graph& g, int v) {
    bool has5 = false, has6 = false;
    for (int w : g.neighbors(v)) {
        int d = g.degree(w);
        if (d <= 5) has5 = true;
        else if (d == 6) has6 = true;
    }
    if (has5) return SenderCtx::adj5minus;
    if (has6) return SenderCtx::adj6;
    return SenderCtx::no_adj6minus;
}

bool ctx_matches(SenderCtx want, SenderCtx have) {
    return want == SenderCtx::any || want == have;
}

// Edges from v to its 6-minus neighbors; the faces incident with one of
// these are the "wu" faces of R1/R2.
std::vector<int> special_edges(const Graph& g, int v) {
    std::vector<int> out;
    for (const auto& [w, e] : g.incident(v))
        if (g.degree(w) <= 6) out.push_back(e);
    return out;
}

bool face_has_edge(const PlaneEmbedding::Face& f, const std::vector<int>& edges) {
    for (int e : f.edge_ids)
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) return true;
    return false;
}

DischargeRule tri(const std::string& id, DegreeRange sender, DegreeRange a, DegreeRange b,
                  const Rational& amount, const std::string& anchor,
                  SenderCtx other4 = SenderCtx::any) {
    DischargeRule r;
    r.id = id;
    r.sender = sender;
    r.face = FaceSel::triangle;
    r.other_a = a;
    r.other_b = b;
    r.other4_ctx = other4;
    r.amount = amount;
    r.anchor = anchor;
    return r;
}

DegreeRange deg(int lo, int hi) { return DegreeRange{lo, hi}; }
DegreeRange atleast(int lo) { return DegreeRange{lo, -1}; }

}  // namespace

DischargeRuleSet DischargeRuleSet::builtin() {
    DischargeRuleSet rs;
    auto add = [&](DischargeRule r) { rs.rules.push_back(std::move(r)); };

    // R1-R3: what a 4-vertex sends, to every incident face.
    {
        DischargeRule r;
        r.id = "r1-near";
        r.sender = deg(4, 4);
        r.ctx = SenderCtx::adj5minus;
        r.face = FaceSel::any_face;
        r.incidence = EdgeIncidence::with_special_edge;
        r.amount = Rational(4, 5);
        r.anchor = "R1: 4-vertex adjacent to a 5--vertex u sends 4/5 to each face incident with wu";
        add(r);
        r.id = "r1-far";
        r.incidence = EdgeIncidence::without_special_edge;
        r.amount = Rational(1, 5);
        r.anchor = "R1: ... and sends 1/5 to each other face";
        add(r);
        r.id = "r2-near";
        r.ctx = SenderCtx::adj6;
        r.incidence = EdgeIncidence::with_special_edge;
        r.amount = Rational(2, 3);
        r.anchor = "R2: 4-vertex adjacent to a 6-vertex u sends 2/3 to each face incident with wu";
        add(r);
        r.id = "r2-far";
        r.incidence = EdgeIncidence::without_special_edge;
        r.amount = Rational(1, 3);
        r.anchor = "R2: ... and sends 1/3 to each other face";
        add(r);
        r.id = "r3";
        r.ctx = SenderCtx::no_adj6minus;
        r.incidence = EdgeIncidence::any;
        r.amount = Rational(1, 2);
        r.anchor = "R3: 4-vertex not adjacent to 6--vertices sends 1/2 to each incident face";
        add(r);
    }

    // R5, R6: transfers into 4+-faces.
    {
        DischargeRule r;
        r.id = "r5";
        r.sender = atleast(9);
        r.face = FaceSel::four_plus;
        r.amount = Rational(1);
        r.anchor = "R5: every 9+-vertex sends 1 to each incident 4+-face";
        add(r);
        r.id = "r6";
        r.sender = deg(5, 8);
        r.face = FaceSel::four_plus;
        r.amount = Rational(1, 2);
        r.anchor = "R6: every vertex with degree 5..8 sends 1/2 to each incident 4+-face";
        add(r);
    }

    // The 3-face table for senders of degree >= 5; 4-vertex amounts on
    // 3-faces come out of R1-R3 above, 3-vertices send nothing.
    add(tri("3f-a", atleast(9), deg(3, 3), atleast(9), Rational(3, 2),
            "(3,9+,9+)-face: -3 + 2*3/2 = 0"));
    add(tri("3f-b", atleast(10), deg(4, 4), deg(4, 4), Rational(7, 5),
            "(4,4,10+)-face: -3 + 2*4/5 + 7/5 = 0"));
    add(tri("3f-c5", deg(5, 5), deg(4, 4), deg(11, 11), Rational(17, 20),
            "(4,5,11)-face: -3 + 4/5 + 17/20 + 27/20 = 0"));
    add(tri("3f-c11", deg(11, 11), deg(4, 4), deg(5, 5), Rational(27, 20),
            "(4,5,11)-face: -3 + 4/5 + 17/20 + 27/20 = 0"));
    add(tri("3f-d5a", deg(5, 5), deg(4, 4), deg(10, 10), Rational(4, 5),
            "(4,5,10)-face: -3 + 2*4/5 + 7/5 = 0"));
    add(tri("3f-d5b", deg(5, 5), deg(4, 4), atleast(12), Rational(4, 5),
            "(4,5,12+)-face: -3 + 2*4/5 + 7/5 = 0"));
    add(tri("3f-d10", deg(10, 10), deg(4, 4), deg(5, 5), Rational(7, 5),
            "(4,5,10)-face: -3 + 2*4/5 + 7/5 = 0"));
    add(tri("3f-d12", atleast(12), deg(4, 4), deg(5, 5), Rational(7, 5),
            "(4,5,12+)-face: -3 + 2*4/5 + 7/5 = 0"));
    add(tri("3f-e6", deg(6, 6), deg(4, 4), atleast(10), Rational(1),
            "(4,6,10+)-face: -3 + 2/3 + 1 + 4/3 = 0"));
    add(tri("3f-e10", atleast(10), deg(4, 4), deg(6, 6), Rational(4, 3),
            "(4,6,10+)-face: -3 + 2/3 + 1 + 4/3 = 0"));
    add(tri("3f-f78", deg(7, 8), deg(4, 4), deg(7, 9), Rational(5, 4),
            "(4,7-8,7-9)-face: -3 + 1/2 + 2*5/4 = 0"));
    add(tri("3f-f9", deg(9, 9), deg(4, 4), deg(7, 8), Rational(5, 4),
            "(4,7-8,7-9)-face: -3 + 1/2 + 2*5/4 = 0"));
    add(tri("3f-g78", deg(7, 8), deg(4, 4), atleast(10), Rational(7, 6),
            "(4,7-8,10+)-face: -3 + 1/2 + 7/6 + 4/3 = 0"));
    add(tri("3f-g10", atleast(10), deg(4, 4), deg(7, 8), Rational(4, 3),
            "(4,7-8,10+)-face: -3 + 1/2 + 7/6 + 4/3 = 0"));
    add(tri("3f-i", atleast(9), deg(4, 4), atleast(9), Rational(7, 5),
            "(4,9+,9+)-face, 4-vertex adjacent to a 5--vertex: -3 + 1/5 + 2*7/5 = 0",
            SenderCtx::adj5minus));
    add(tri("3f-j", atleast(9), deg(4, 4), atleast(9), Rational(4, 3),
            "(4,9+,9+)-face, 4-vertex adjacent to a 6-vertex: -3 + 1/3 + 2*4/3 = 0",
            SenderCtx::adj6));
    add(tri("3f-k", atleast(9), deg(4, 4), atleast(9), Rational(5, 4),
            "(4,9+,9+)-face, 4-vertex not adjacent to 6--vertices: -3 + 1/2 + 2*5/4 = 0",
            SenderCtx::no_adj6minus));
    add(tri("3f-l5", deg(5, 5), deg(5, 5), deg(5, 7), Rational(1),
            "(5,5,5-7)-face: -3 + 3*1 = 0"));
    add(tri("3f-l67", deg(6, 7), deg(5, 5), deg(5, 5), Rational(1),
            "(5,5,5-7)-face: -3 + 3*1 = 0"));
    add(tri("3f-m5", deg(5, 5), deg(5, 5), atleast(8), Rational(7, 8),
            "(5,5,8+)-face: -3 + 2*7/8 + 5/4 = 0"));
    add(tri("3f-m8", atleast(8), deg(5, 5), deg(5, 5), Rational(5, 4),
            "(5,5,8+)-face: -3 + 2*7/8 + 5/4 = 0"));
    add(tri("3f-n5", deg(5, 5), deg(6, 6), deg(6, 6), Rational(1),
            "(5,6,6)-face: -3 + 3*1 = 0"));
    add(tri("3f-n6", deg(6, 6), deg(5, 5), deg(6, 6), Rational(1),
            "(5,6,6)-face: -3 + 3*1 = 0"));
    add(tri("3f-o5", deg(5, 5), deg(6, 6), deg(7, 7), Rational(5, 6),
            "(5,6,7)-face: -3 + 5/6 + 1 + 7/6 = 0"));
    add(tri("3f-o6", deg(6, 6), deg(5, 5), deg(7, 7), Rational(1),
            "(5,6,7)-face: -3 + 5/6 + 1 + 7/6 = 0"));
    add(tri("3f-o7", deg(7, 7), deg(5, 5), deg(6, 6), Rational(7, 6),
            "(5,6,7)-face: -3 + 5/6 + 1 + 7/6 = 0"));
    add(tri("3f-p5", deg(5, 5), deg(6, 6), atleast(8), Rational(3, 4),
            "(5,6,8+)-face: -3 + 3/4 + 1 + 5/4 = 0"));
    add(tri("3f-p6", deg(6, 6), deg(5, 5), atleast(8), Rational(1),
            "(5,6,8+)-face: -3 + 3/4 + 1 + 5/4 = 0"));
    add(tri("3f-p8", atleast(8), deg(5, 5), deg(6, 6), Rational(5, 4),
            "(5,6,8+)-face: -3 + 3/4 + 1 + 5/4 = 0"));
    add(tri("3f-q5", deg(5, 5), deg(7, 7), deg(7, 7), Rational(2, 3),
            "(5,7,7)-face: -3 + 2/3 + 2*7/6 = 0"));
    add(tri("3f-q7", deg(7, 7), deg(5, 5), deg(7, 7), Rational(7, 6),
            "(5,7,7)-face: -3 + 2/3 + 2*7/6 = 0"));
    add(tri("3f-r5", deg(5, 5), deg(7, 7), atleast(8), Rational(17, 28),
            "(5,7,8+)-face: -3 + 17/28 + 8/7 + 5/4 = 0"));
    add(tri("3f-r7", deg(7, 7), deg(5, 5), atleast(8), Rational(8, 7),
            "(5,7,8+)-face: -3 + 17/28 + 8/7 + 5/4 = 0"));
    add(tri("3f-r8", atleast(8), deg(5, 5), deg(7, 7), Rational(5, 4),
            "(5,7,8+)-face: -3 + 17/28 + 8/7 + 5/4 = 0"));
    add(tri("3f-s5", deg(5, 5), atleast(8), atleast(8), Rational(1, 2),
            "(5,8+,8+)-face: -3 + 1/2 + 2*5/4 = 0"));
    add(tri("3f-s8", atleast(8), deg(5, 5), atleast(8), Rational(5, 4),
            "(5,8+,8+)-face: -3 + 1/2 + 2*5/4 = 0"));
    add(tri("3f-t", atleast(6), atleast(6), atleast(6), Rational(1),
            "(6+,6+,6+)-face: -3 + 3*1 = 0"));
    return rs;
}

std::vector<std::size_t> DischargeRuleSet::matching(const PlaneEmbedding& e, int v,
                                                    const PlaneEmbedding::Face& f) const {
    const Graph& g = e.graph;
    int d = g.degree(v);
    SenderCtx vctx = classify_ctx(g, v);

    bool is_triangle = f.degree() == 3;
    std::vector<int> others;
    if (is_triangle) {
        std::set<int> distinct(f.vertices.begin(), f.vertices.end());
        if (distinct.size() != 3) is_triangle = false;  // degenerate boundary
    }
    int other_lo = 0, other_hi = 0;
    SenderCtx other4 = SenderCtx::any;
    if (is_triangle) {
        for (int w : f.vertices)
            if (w != v) others.push_back(g.degree(w));
        std::sort(others.begin(), others.end());
        other_lo = others[0];
        other_hi = others[1];
        for (int w : f.vertices)
            if (w != v && g.degree(w) == 4) other4 = classify_ctx(g, w);
    }

    std::vector<int> specials;
    bool specials_ready = false;

    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const DischargeRule& r = rules[i];
        if (!r.sender.contains(d)) continue;
        if (!ctx_matches(r.ctx, vctx)) continue;
        if (r.face == FaceSel::triangle) {
            if (!is_triangle) continue;
            bool pair_ok = (r.other_a.contains(other_lo) && r.other_b.contains(other_hi)) ||
                           (r.other_a.contains(other_hi) && r.other_b.contains(other_lo));
            if (!pair_ok) continue;
            if (r.other4_ctx != SenderCtx::any && !ctx_matches(r.other4_ctx, other4)) continue;
        } else if (r.face == FaceSel::four_plus) {
            if (f.degree() < 4) continue;
        }
        if (r.incidence != EdgeIncidence::any) {
            if (!specials_ready) {
                specials = special_edges(g, v);
                specials_ready = true;
            }
            bool with = face_has_edge(f, specials);
            if (r.incidence == EdgeIncidence::with_special_edge && !with) continue;
            if (r.incidence == EdgeIncidence::without_special_edge && with) continue;
        }
        hits.push_back(i);
    }
    return hits;
}

Rational DischargeRuleSet::query(int sender_degree, std::optional<std::pair<int, int>> tri_others,
                                 SenderCtx ctx, SenderCtx other4, EdgeIncidence incidence) const {
    std::vector<const DischargeRule*> hits;
    for (const auto& r : rules) {
        if (!r.sender.contains(sender_degree)) continue;
        if (!ctx_matches(r.ctx, ctx)) continue;
        if (r.face == FaceSel::triangle) {
            if (!tri_others) continue;
            auto [a, b] = *tri_others;
            if (a > b) std::swap(a, b);
            bool pair_ok = (r.other_a.contains(a) && r.other_b.contains(b)) ||
                           (r.other_a.contains(b) && r.other_b.contains(a));
            if (!pair_ok) continue;
            if (r.other4_ctx != SenderCtx::any &&
                (other4 == SenderCtx::any || r.other4_ctx != other4))
                continue;
        } else if (r.face == FaceSel::four_plus) {
            if (tri_others) continue;
        }
        if (r.incidence != EdgeIncidence::any && r.incidence != incidence) continue;
        hits.push_back(&r);
    }
    if (hits.empty()) return Rational(0);
    if (hits.size() > 1)
        throw AmbiguousRuleMatch("query: rows '" + hits[0]->id + "' and '" + hits[1]->id +
                                 "' both fire (" + hits[0]->anchor + " / " + hits[1]->anchor + ")");
    return hits[0]->amount;
}

std::string DischargeRuleSet::to_dsl() const {
    std::ostringstream out;
    for (const auto& r : rules) {
        out << "sender: " << r.sender.str();
        if (r.ctx != SenderCtx::any) out << " " << sender_ctx_name(r.ctx);
        out << " ; face: ";
        switch (r.face) {
            case FaceSel::triangle:
                out << "3(" << r.other_a.str() << "," << r.other_b.str() << ")";
                if (r.other4_ctx != SenderCtx::any)
                    out << " other4:" << sender_ctx_name(r.other4_ctx);
                break;
            case FaceSel::four_plus: out << "4+"; break;
            case FaceSel::any_face: out << "any"; break;
        }
        if (r.incidence == EdgeIncidence::with_special_edge) out << " edge:with";
        if (r.incidence == EdgeIncidence::without_special_edge) out << " edge:without";
        out << " ; amount: " << r.amount.str() << " ; anchor: " << r.anchor << "\n";
    }
    return out.str();
}

DischargeRuleSet DischargeRuleSet::from_dsl(const std::string& text) {
    DischargeRuleSet rs;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = line;
        auto first = t.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (t[first] == '#') continue;

        auto field = [&](const std::string& name) {
            auto pos = t.find(name + ":");
            if (pos == std::string::npos)
                throw ParseError("rule DSL line " + std::to_string(lineno) + ": missing '" +
                                 name + ":'");
            auto start = pos + name.size() + 1;
            auto end = t.find(';', start);
            std::string raw =
                t.substr(start, end == std::string::npos ? std::string::npos : end - start);
            auto b = raw.find_first_not_of(" \t");
            auto e2 = raw.find_last_not_of(" \t");
            if (b == std::string::npos) return std::string();
            return raw.substr(b, e2 - b + 1);
        };

        DischargeRule r;
        r.id = "file-" + std::to_string(rs.rules.size());
        {
            std::istringstream ss(field("sender"));
            std::string range, ctx;
            ss >> range;
            r.sender = DegreeRange::parse(range);
            if (ss >> ctx) r.ctx = ctx_from_name(ctx);
        }
        {
            std::istringstream ss(field("face"));
            std::string kind;
            ss >> kind;
            if (kind == "4+") {
                r.face = FaceSel::four_plus;
            } else if (kind == "any") {
                r.face = FaceSel::any_face;
            } else if (kind.rfind("3(", 0) == 0 && kind.back() == ')') {
                r.face = FaceSel::triangle;
                std::string inner = kind.substr(2, kind.size() - 3);
                auto comma = inner.find(',');
                if (comma == std::string::npos)
                    throw ParseError("rule DSL line " + std::to_string(lineno) +
                                     ": triangle needs two ranges");
                r.other_a = DegreeRange::parse(inner.substr(0, comma));
                r.other_b = DegreeRange::parse(inner.substr(comma + 1));
            } else {
                throw ParseError("rule DSL line " + std::to_string(lineno) +
                                 ": bad face selector '" + kind + "'");
            }
            std::string extra;
            while (ss >> extra) {
                if (extra.rfind("other4:", 0) == 0)
                    r.other4_ctx = ctx_from_name(extra.substr(7));
                else if (extra == "edge:with")
                    r.incidence = EdgeIncidence::with_special_edge;
                else if (extra == "edge:without")
                    r.incidence = EdgeIncidence::without_special_edge;
                else
                    throw ParseError("rule DSL line " + std::to_string(lineno) +
                                     ": unknown face qualifier '" + extra + "'");
            }
        }
        r.amount = Rational::parse(field("amount"));
        r.anchor = field("anchor");
        rs.rules.push_back(std::move(r));
    }
    return rs;
}

Rational ChargeState::total() const {
    Rational t(0);
    for (const auto& c : vertex_charge) t += c;
    for (const auto& c : face_charge) t += c;
    return t;
}

ChargeState formula_charges(const PlaneEmbedding& e) {
    ChargeState s;
    for (int v = 0; v < e.graph.vertex_count(); ++v)
        s.vertex_charge.push_back(Rational(2 * e.graph.degree(v) - 6));
    for (const auto& f : e.faces) s.face_charge.push_back(Rational(f.degree() - 6));
    return s;
}

ChargeState initial_charges(const PlaneEmbedding& e) {
    if (e.component_vertices.size() > 1)
        throw DisconnectedInput("initial_charges: embedding has " +
                                std::to_string(e.component_vertices.size()) +
                                " components; audit per component");
    return formula_charges(e);
}

ApplyResult apply_rules(const PlaneEmbedding& e, const DischargeRuleSet& rules) {
    ApplyResult result;
    result.final_state = formula_charges(e);
    for (int v = 0; v < e.graph.vertex_count(); ++v) {
        std::vector<int> face_ids = e.faces_at_vertex(v);
        std::sort(face_ids.begin(), face_ids.end());
        face_ids.erase(std::unique(face_ids.begin(), face_ids.end()), face_ids.end());
        for (int fid : face_ids) {
            const auto& f = e.faces[static_cast<std::size_t>(fid)];
            std::vector<std::size_t> hits = rules.matching(e, v, f);
            if (hits.empty()) continue;
            if (hits.size() > 1)
                throw AmbiguousRuleMatch(
                    "apply_rules: vertex " + std::to_string(v) + " / face " + std::to_string(fid) +
                    ": rows '" + rules.rules[hits[0]].id + "' (" + rules.rules[hits[0]].anchor +
                    ") and '" + rules.rules[hits[1]].id + "' (" + rules.rules[hits[1]].anchor +
                    ") both fire");
            const DischargeRule& r = rules.rules[hits[0]];
            result.final_state.vertex_charge[static_cast<std::size_t>(v)] -= r.amount;
            result.final_state.face_charge[static_cast<std::size_t>(fid)] += r.amount;
            result.trace.push_back(FiredRule{v, fid, hits[0], r.amount});
        }
    }
    return result;
}

AuditReport audit_embedding(const PlaneEmbedding& e, const DischargeRuleSet& rules,
                            bool include_identities) {
    AuditReport report;
    report.components = static_cast<int>(e.component_vertices.size());
    ChargeState initial = formula_charges(e);
    report.total_initial = initial.total();
    ApplyResult applied = apply_rules(e, rules);
    report.total_final = applied.final_state.total();

    auto fired_at = [&](bool is_vertex, int element) {
        std::vector<FiredRule> out;
        for (const auto& fr : applied.trace)
            if (is_vertex ? fr.vertex == element : fr.face == element) out.push_back(fr);
        return out;
    };
    for (int v = 0; v < e.graph.vertex_count(); ++v) {
        const Rational& c = applied.final_state.vertex_charge[static_cast<std::size_t>(v)];
        if (c.negative()) report.negatives.push_back(NegativeEntry{true, v, c, fired_at(true, v)});
    }
    for (int f = 0; f < e.face_count(); ++f) {
        const Rational& c = applied.final_state.face_charge[static_cast<std::size_t>(f)];
        if (c.negative()) report.negatives.push_back(NegativeEntry{false, f, c, fired_at(false, f)});
    }
    if (include_identities) report.identity_checks = verify_identities();
    return report;
}

namespace {

IdentityCheck eq(const std::string& id, const Rational& lhs, const Rational& rhs) {
    return IdentityCheck{id, lhs, rhs, "=", lhs == rhs};
}
IdentityCheck ge(const std::string& id, const Rational& lhs, const Rational& rhs) {
    return IdentityCheck{id, lhs, rhs, ">=", lhs >= rhs};
}
IdentityCheck gt(const std::string& id, const Rational& lhs, const Rational& rhs) {
    return IdentityCheck{id, lhs, rhs, ">", lhs > rhs};
}

}  // namespace

std::vector<IdentityCheck> verify_identities() {
    using R = Rational;
    std::vector<IdentityCheck> out;
    auto add = [&](IdentityCheck c) { out.push_back(std::move(c)); };

    // 3-face final charges.
    add(eq("face-3-9p-9p", R(-3) + R(2) * R(3, 2), R(0)));
    add(eq("face-4-4-10p", R(-3) + R(2) * R(4, 5) + R(7, 5), R(0)));
    add(eq("face-4-5-11", R(-3) + R(4, 5) + R(17, 20) + R(27, 20), R(0)));
    add(eq("face-4-5-n11", R(-3) + R(2) * R(4, 5) + R(7, 5), R(0)));
    add(eq("face-4-6-10p", R(-3) + R(2, 3) + R(1) + R(4, 3), R(0)));
    add(eq("face-4-78-79", R(-3) + R(1, 2) + R(2) * R(5, 4), R(0)));
    add(eq("face-4-78-10p", R(-3) + R(1, 2) + R(7, 6) + R(4, 3), R(0)));
    add(eq("face-4-9p-9p-i", R(-3) + R(1, 5) + R(2) * R(7, 5), R(0)));
    add(eq("face-4-9p-9p-j", R(-3) + R(1, 3) + R(2) * R(4, 3), R(0)));
    add(eq("face-4-9p-9p-k", R(-3) + R(1, 2) + R(2) * R(5, 4), R(0)));
    add(eq("face-5-5-57", R(-3) + R(3) * R(1), R(0)));
    add(eq("face-5-5-8p", R(-3) + R(2) * R(7, 8) + R(5, 4), R(0)));
    add(eq("face-5-6-6", R(-3) + R(3) * R(1), R(0)));
    add(eq("face-5-6-7", R(-3) + R(5, 6) + R(1) + R(7, 6), R(0)));
    add(eq("face-5-6-8p", R(-3) + R(3, 4) + R(1) + R(5, 4), R(0)));
    add(eq("face-5-7-7", R(-3) + R(2, 3) + R(2) * R(7, 6), R(0)));
    add(eq("face-5-7-8p", R(-3) + R(17, 28) + R(8, 7) + R(5, 4), R(0)));
    add(eq("face-5-8p-8p", R(-3) + R(1, 2) + R(2) * R(5, 4), R(0)));
    add(eq("face-6p-6p-6p", R(-3) + R(3) * R(1), R(0)));

    // 4- and 5-face bounds.
    add(eq("face-4gon-halves", R(-2) + R(4) * R(1, 2), R(0)));
    add(eq("face-4gon-9p", R(-2) + R(2) * R(1), R(0)));
    add(eq("face-5gon-9p", R(-1) + R(1), R(0)));
    add(eq("face-5gon-5p5p", R(-1) + R(2) * R(1, 2), R(0)));

    // Vertex final charges.
    add(eq("vert-4-r1", R(2) - R(2) * R(4, 5) - R(2) * R(1, 5), R(0)));
    add(eq("vert-4-r2", R(2) - R(2) * R(2, 3) - R(2) * R(1, 3), R(0)));
    add(eq("vert-4-r3", R(2) - R(4) * R(1, 2), R(0)));
    add(eq("vert-5-cap", R(4) - R(5) * R(4, 5), R(0)));
    add(gt("vert-5-555", R(4) - R(1) - R(2) * R(7, 8) - R(2) * R(1, 2), R(0)));
    add(gt("vert-5-556", R(4) - R(1) - R(7, 8) - R(3, 4) - R(2) * R(1, 2), R(0)));
    add(eq("vert-5-557", R(4) - R(2) * R(1) - R(3) * R(2, 3), R(0)));
    add(eq("vert-5-566", R(4) - R(1) - R(2) * R(5, 6) - R(2) * R(2, 3), R(0)));
    add(eq("vert-5-half", R(4) - R(4) * R(7, 8) - R(1, 2), R(0)));
    add(gt("vert-5-77edge", R(4) - R(2) * R(7, 8) - R(2) * R(17, 28) - R(2, 3), R(0)));
    add(gt("vert-5-67edge", R(4) - R(2) * R(7, 8) - R(3, 4) - R(5, 6) - R(17, 28), R(0)));
    add(gt("vert-5-4-11-a", R(4) - R(5, 6) - R(3, 4) - R(17, 28) - R(2) * R(17, 20), R(0)));
    add(eq("vert-5-567-6", R(4) - R(2, 3) - R(4) * R(5, 6), R(0)));
    add(gt("vert-5-4-11-b", R(4) - R(2) * R(17, 28) - R(2, 3) - R(2) * R(17, 20), R(0)));
    add(eq("vert-6", R(6) - R(6) * R(1), R(0)));
    add(eq("vert-7-half", R(8) - R(6) * R(5, 4) - R(1, 2), R(0)));
    add(eq("vert-7-alltri", R(8) - R(6) * R(7, 6) - R(1), R(0)));
    add(eq("vert-8", R(10) - R(8) * R(5, 4), R(0)));
    add(gt("vert-9-reduced", R(12) - R(7) * R(1) - R(2) * R(3, 2), R(0)));
    add(gt("vert-9-tau4", R(12) - R(5) * R(3, 2) - R(4) * R(1), R(0)));
    for (int tau = 0; tau <= 3; ++tau) {
        add(ge("vert-9-tau" + std::to_string(tau),
               R(12) - R(tau) - R(2 * tau) * R(3, 2) - R(9 - 3 * tau) * R(5, 4), R(0)));
    }
    add(gt("vert-10-reduced", R(14) - R(4) * R(3, 2) - R(6) * R(1), R(0)));
    add(eq("vert-10-two4p", R(14) - R(8) * R(3, 2) - R(2) * R(1), R(0)));
    for (int s = 0; s <= 4; ++s) {
        add(eq("vert-10-s" + std::to_string(s) + "-closed",
               R(14) - R(s) * R(3, 2) - R(10 - s) * R(4, 3), R(2, 3) - R(s, 6)));
        add(ge("vert-10-s" + std::to_string(s), R(14) - R(s) * R(3, 2) - R(10 - s) * R(4, 3),
               R(0)));
    }
    add(eq("vert-10-sstar0", R(14) - R(6) * R(3, 2) - R(4) * R(5, 4), R(0)));
    add(eq("vert-10-one4p", R(14) - R(6) * R(3, 2) - R(1) - R(3) * R(4, 3), R(0)));
    add(gt("vert-10-s6", R(14) - R(6) * R(3, 2) - R(2) * R(4, 3) - R(2) * R(1), R(0)));
    add(gt("vert-11-reduced", R(16) - R(6) * R(3, 2) - R(5) * R(1), R(0)));
    add(eq("vert-11-send1", R(16) - R(10) * R(3, 2) - R(1), R(0)));
    add(eq("vert-11-three3", R(16) - R(6) * R(3, 2) - R(5) * R(7, 5), R(0)));
    add(gt("vert-11-5511", R(16) - R(8) * R(3, 2) - R(3) * R(5, 4), R(0)));
    add(eq("vert-11-4511", R(16) - R(8) * R(3, 2) - R(5, 4) - R(27, 20) - R(7, 5), R(0)));
    for (int d = 12; d <= 14; ++d) {
        add(ge("vert-" + std::to_string(d) + "-closed",
               R(2 * d - 6) - R(d) * R(3, 2), R(0)));
    }
    add(eq("vert-12p-form", R(2 * 12 - 6) - R(12) * R(3, 2), R(12, 2) - R(6)));
    return out;
}

}  // namespace chromata
