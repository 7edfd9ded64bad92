#include "chromata/vertex_cases.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "chromata/errors.hpp"

namespace chromata {

namespace {

// Degree classes are exact H-degrees 3..11 plus 12 standing for "12 or
// more". All send amounts live in units of 1/840 so the search runs on
// integers; 840 = lcm of the rule denominators.
constexpr int kScale = 840;
constexpr int kNoFace = -1;  // sentinel for "slot illegal"

int units(int num, int den) { return num * (kScale / den); }

// What a d-vertex sends into a 3-face whose other two corners have classes
// a <= b. `reduced` marks the deg_G > deg_H case (deg_G otherwise equals d).
// Returns kNoFace when the catalog rules the face out, and -2 when a face
// is admissible but no transfer row covers it.
int tri_send_units(int d, bool reduced, int a, int b) {
    if (a > b) std::swap(a, b);
    if (a == 3) {
        // Neighbors of a 3-vertex are 9+ (in G and in H).
        if (b < 9 || d < 9) return kNoFace;
        return units(3, 2);
    }
    if (a == 4) {
        if (b == 4) {  // third corner needs deg_G >= 12
            if (d < 10 || (!reduced && d < 12)) return kNoFace;
            return units(7, 5);
        }
        if (b == 5) {  // third corner needs deg_G >= 11
            if (d < 10 || (!reduced && d < 11)) return kNoFace;
            return d == 11 ? units(27, 20) : units(7, 5);
        }
        if (b == 6) {  // third corner needs deg_G >= 10
            if (d < 10) return kNoFace;
            return units(4, 3);
        }
        if (b <= 8) {  // (4,7-8,x)
            if (d >= 10) return units(4, 3);
            if (d >= 7) return units(5, 4);
            return kNoFace;  // d in 5..6 would be the third corner of a (4,5)/(4,6)-edge
        }
        // b >= 9
        if (d >= 9) {  // (4,9+,9+): amount tracks the 4-vertex's feasible context
            if (reduced || d >= 11) return units(7, 5);
            if (d == 10) return units(4, 3);
            return units(5, 4);
        }
        if (d == 5) {  // (4,5,b): b is the third corner, needs deg_G >= 11
            if (b == 11) return units(17, 20);
            if (b == 10 || b >= 12) return units(4, 5);
            return kNoFace;  // b == 9
        }
        if (d == 6) return b >= 10 ? units(1, 1) : kNoFace;
        if (d <= 8) return b == 9 ? units(5, 4) : units(7, 6);
        return -2;
    }
    if (a == 5) {
        if (b == 5) return d <= 7 ? units(1, 1) : units(5, 4);
        if (b == 6) {
            if (d == 5 || d == 6) return units(1, 1);
            if (d == 7) return units(7, 6);
            return units(5, 4);
        }
        if (b == 7) {
            if (d <= 6) return units(1, 1);
            if (d == 7) return units(7, 6);
            return units(5, 4);
        }
        if (d == 5) return units(7, 8);
        if (d == 6) return units(1, 1);
        if (d == 7) return units(8, 7);
        return units(5, 4);
    }
    if (a == 6) {
        if (d == 5) {
            if (b == 6) return units(1, 1);
            if (b == 7) return units(5, 6);
            return units(3, 4);
        }
        return units(1, 1);
    }
    if (a == 7) {
        if (d == 5) return b == 7 ? units(2, 3) : units(17, 28);
        return units(1, 1);
    }
    // a >= 8
    if (d == 5) return units(1, 2);
    return units(1, 1);
}

int big_send_units(int d) {
    if (d <= 4) return 0;          // 3-vertices send nothing; 4-vertices are closed-form
    if (d <= 8) return units(1, 2);
    return units(1, 1);
}

struct CaseSpec {
    int d = 0;
    bool reduced = false;
    std::string name;
    std::vector<int> classes;
    int small_cap = -1;        // reduced: max number of <=7 neighbors
    bool x_star = false;       // the 3-vertex/10-vertex 4-set exclusion
    bool three_needs_big = false;  // every 3-neighbor keeps one slot off a triangle
    bool pin_first_three = false;  // branch with one 3-neighbor on two triangles
    bool others_min8 = false;      // companion of pin_first_three
    bool five_sum = false;         // the 5-vertex neighbor-sum bounds
    bool four_two_triangles = false;  // (4, d<=7)-edge in two triangles: flanks are 10+
};

// The 5-vertex neighbor-sum trigger: a 3-face (5,a,b) with small corners
// forces every other neighbor up to 19 - a - b.
int five_sum_bound(int a, int b) {
    if (a > b) std::swap(a, b);
    if ((a <= 6 && b <= 6) || (a <= 5 && b <= 7)) return 19 - a - b;
    return 0;
}

struct Engine {
    CaseSpec spec;
    int d;
    std::unordered_map<std::uint64_t, long long> memo;
    bool hit_unmatched = false;

    explicit Engine(CaseSpec s) : spec(std::move(s)), d(spec.d) {}

    int slot_units(int a, int b, bool tri) {
        if (!tri) return big_send_units(d);
        int u = tri_send_units(d, spec.reduced, a, b);
        if (u == -2) {
            hit_unmatched = true;
            return kNoFace;
        }
        return u;
    }

    bool window_ok(int left_cls, bool left_tri, int mid_cls, bool right_tri, int right_cls) const {
        if (spec.three_needs_big && mid_cls == 3 && left_tri && right_tri) return false;
        if (spec.four_two_triangles && mid_cls == 4 && left_tri && right_tri &&
            (left_cls < 10 || right_cls < 10))
            return false;
        return true;
    }

    // The exclusion tests only compare counters against small thresholds,
    // so clamping keeps the memo exact: c3 at 5, c4 at 3, c5 at 1, csmall
    // just past its cap.
    int clamp3(int c) const { return std::min(c, 5); }
    int clamp4(int c) const { return std::min(c, 3); }
    int clamp5(int c) const { return std::min(c, 1); }
    int clamp_small(int c) const {
        return spec.small_cap < 0 ? 0 : std::min(c, spec.small_cap + 1);
    }

    bool counters_ok(int c3, int c4, int c5, int csmall) const {
        if (spec.small_cap >= 0 && csmall > spec.small_cap) return false;
        if (spec.x_star && c3 >= 1) {
            // Forbidden: a 4-subset of the other neighbors, all 5-, summing
            // to at most 15, with at least two 4-'s.
            int avail3 = c3 - 1;
            for (int i = 0; i <= std::min(4, avail3); ++i)
                for (int j = 0; i + j <= 4 && j <= c4; ++j) {
                    int k = 4 - i - j;
                    if (k < 0 || k > c5) continue;
                    if (3 * i + 4 * j + 5 * k <= 15 && i + j >= 2) return false;
                }
        }
        return true;
    }

    std::uint64_t key(int i, int n1, bool t1, int n2, int prev2, bool tprev, int prev, int c3,
                      int c4, int c5, int csmall) const {
        std::uint64_t k = 0;
        auto push = [&](int v, int bits) { k = (k << bits) | static_cast<std::uint64_t>(v); };
        push(i, 5);
        push(n1, 4);
        push(t1 ? 1 : 0, 1);
        push(n2, 4);
        push(prev2, 4);
        push(tprev ? 1 : 0, 1);
        push(prev, 4);
        push(std::min(c3, 15), 4);
        push(std::min(c4, 15), 4);
        push(std::min(c5, 15), 4);
        push(std::min(csmall, 15), 4);
        return k;
    }

    // Max over remaining decisions: place neighbors i..d then close slot d.
    // Class values are indices into spec.classes here to keep keys small.
    long long best(int i, int n1i, bool t1, int n2i, int prev2i, bool tprev, int previ, int c3,
                   int c4, int c5, int csmall) {
        const auto& cls = spec.classes;
        if (i > d) {
            // Close: pick the slot between n_d (= prev) and n_1.
            long long out = kNoFace;
            for (bool td : {true, false}) {
                if (spec.pin_first_three && !td) continue;  // both slots of the pinned 3 stay triangles
                int send = slot_units(cls[static_cast<std::size_t>(previ)],
                                      cls[static_cast<std::size_t>(n1i)], td);
                if (send == kNoFace) continue;
                if (!window_ok(cls[static_cast<std::size_t>(prev2i)], tprev,
                               cls[static_cast<std::size_t>(previ)], td,
                               cls[static_cast<std::size_t>(n1i)]))
                    continue;
                if (!window_ok(cls[static_cast<std::size_t>(previ)], td,
                               cls[static_cast<std::size_t>(n1i)], t1,
                               cls[static_cast<std::size_t>(n2i)]))
                    continue;
                out = std::max(out, static_cast<long long>(send));
            }
            return out;
        }
        std::uint64_t k = key(i, n1i, t1, n2i, prev2i, tprev, previ, c3, c4, c5, csmall);
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;

        long long out = kNoFace;
        for (std::size_t ni = 0; ni < cls.size(); ++ni) {
            int ncls = cls[ni];
            int nc3 = clamp3(c3 + (ncls == 3)), nc4 = clamp4(c4 + (ncls == 4)),
                nc5 = clamp5(c5 + (ncls == 5));
            int nsmall = clamp_small(csmall + (ncls <= 7));
            if (!counters_ok(nc3, nc4, nc5, nsmall)) continue;
            if (spec.others_min8 && ncls < 8) continue;
            for (bool t : {true, false}) {
                int send = slot_units(cls[static_cast<std::size_t>(previ)], ncls, t);
                if (send == kNoFace) continue;
                if (i >= 3 && !window_ok(cls[static_cast<std::size_t>(prev2i)], tprev,
                                         cls[static_cast<std::size_t>(previ)], t, ncls))
                    continue;
                long long rest = best(i + 1, n1i, t1, n2i, previ, t, static_cast<int>(ni), nc3,
                                      nc4, nc5, nsmall);
                if (rest == kNoFace) continue;
                out = std::max(out, send + rest);
            }
        }
        memo.emplace(k, out);
        return out;
    }

    // Maximum total send, or nullopt when no admissible configuration.
    std::optional<long long> run() {
        const auto& cls = spec.classes;
        long long out = kNoFace;
        for (std::size_t i1 = 0; i1 < cls.size(); ++i1) {
            if (spec.pin_first_three && cls[i1] != 3) continue;
            int c3 = (cls[i1] == 3), c4 = (cls[i1] == 4), c5 = (cls[i1] == 5);
            int csmall = (cls[i1] <= 7);
            if (!counters_ok(c3, c4, c5, csmall)) continue;
            for (std::size_t i2 = 0; i2 < cls.size(); ++i2) {
                int nc3 = clamp3(c3 + (cls[i2] == 3)), nc4 = clamp4(c4 + (cls[i2] == 4)),
                    nc5 = clamp5(c5 + (cls[i2] == 5));
                int nsmall = clamp_small(csmall + (cls[i2] <= 7));
                if (!counters_ok(nc3, nc4, nc5, nsmall)) continue;
                if (spec.others_min8 && cls[i2] < 8) continue;
                for (bool t1 : {true, false}) {
                    if (spec.pin_first_three && !t1) continue;
                    int send = slot_units(cls[i1], cls[i2], t1);
                    if (send == kNoFace) continue;
                    long long rest = best(3, static_cast<int>(i1), t1, static_cast<int>(i2),
                                          static_cast<int>(i1), t1, static_cast<int>(i2), nc3,
                                          nc4, nc5, nsmall);
                    if (rest == kNoFace) continue;
                    out = std::max(out, send + rest);
                }
            }
        }
        if (out == kNoFace) return std::nullopt;
        return out;
    }
};

// The global C5 pass for 5-vertices runs as a plain exhaustive scan; the
// neighbor-sum bound couples a slot to every other neighbor, which the
// rolling window cannot see.
std::optional<long long> run_five(const CaseSpec& spec) {
    const auto& cls = spec.classes;
    int d = spec.d;
    std::vector<int> n(static_cast<std::size_t>(d));
    std::vector<bool> t(static_cast<std::size_t>(d));
    long long best = kNoFace;
    bool found = false;

    auto config_value = [&]() -> long long {
        long long total = 0;
        for (int i = 0; i < d; ++i) {
            int a = n[static_cast<std::size_t>(i)];
            int b = n[static_cast<std::size_t>((i + 1) % d)];
            bool tri = t[static_cast<std::size_t>(i)];
            int send = tri ? tri_send_units(d, spec.reduced, a, b) : big_send_units(d);
            if (send == kNoFace || send == -2) return kNoFace;
            if (tri) {
                int bound = five_sum_bound(a, b);
                if (bound > 0) {
                    for (int j = 0; j < d; ++j) {
                        if (j == i || j == (i + 1) % d) continue;
                        if (n[static_cast<std::size_t>(j)] < bound) return kNoFace;
                    }
                }
            }
            if (spec.four_two_triangles) {
                int mid = n[static_cast<std::size_t>((i + 1) % d)];
                bool right = t[static_cast<std::size_t>((i + 1) % d)];
                int rightcls = n[static_cast<std::size_t>((i + 2) % d)];
                if (mid == 4 && tri && right && (a < 10 || rightcls < 10)) return kNoFace;
            }
            total += send;
        }
        return total;
    };

    std::function<void(int)> rec = [&](int pos) {
        if (pos == 2 * d) {
            long long v = config_value();
            if (v != kNoFace) {
                found = true;
                best = std::max(best, v);
            }
            return;
        }
        if (pos < d) {
            for (int c : cls) {
                n[static_cast<std::size_t>(pos)] = c;
                rec(pos + 1);
            }
        } else {
            for (bool b : {true, false}) {
                t[static_cast<std::size_t>(pos - d)] = b;
                rec(pos + 1);
            }
        }
    };
    rec(0);
    if (!found) return std::nullopt;
    return best;
}

Rational case_min_charge(int d, long long max_send_units) {
    return Rational(2 * d - 6) - Rational(max_send_units, kScale);
}

// Neighbor classes that behave identically for a given sender degree are
// merged behind one representative; the full ten-class domain is kept only
// where a distinction matters. full_domain forces the unmerged domain (the
// cross-validation test compares both).
std::vector<CaseSpec> cases_for_degree(int d, bool full_domain) {
    std::vector<CaseSpec> out;
    auto classes_full = [] { return std::vector<int>{3, 4, 5, 6, 7, 8, 9, 10, 11, 12}; };
    auto pick = [&](std::vector<int> merged) { return full_domain ? classes_full() : merged; };
    switch (d) {
        case 5: {
            CaseSpec c;
            c.d = 5;
            c.name = "deg_G = 5";
            c.classes = {4, 5, 6, 7, 8, 9, 10, 11, 12};
            c.five_sum = true;
            c.four_two_triangles = true;
            out.push_back(c);
            break;
        }
        case 6:
        case 7: {
            CaseSpec c;
            c.d = d;
            c.name = "deg_G = " + std::to_string(d);
            c.classes = classes_full();
            c.four_two_triangles = true;
            out.push_back(c);
            break;
        }
        case 8: {
            CaseSpec eq;
            eq.d = 8;
            eq.name = "deg_G = 8";
            eq.classes = pick({3, 4, 5, 6, 7, 10});  // 7 covers 7-9, 10 covers 10+
            out.push_back(eq);
            CaseSpec red;
            red.d = 8;
            red.reduced = true;
            red.name = "deg_G > 8 (no neighbors of degree <= 7)";
            red.classes = pick({9});  // everything left is 8+ and behaves alike
            red.small_cap = 0;
            out.push_back(red);
            break;
        }
        case 9: {
            CaseSpec b2;
            b2.d = 9;
            b2.name = "deg_G = 9, every (3,9)-edge on at most one 3-face";
            b2.classes = pick({3, 4, 5, 6, 7, 9});  // 7 covers 7-8, 9 covers 9+
            b2.three_needs_big = true;
            out.push_back(b2);
            CaseSpec b1;
            b1.d = 9;
            b1.name = "deg_G = 9, a (3,9)-edge on two 3-faces (L9: others are 8+)";
            b1.classes = full_domain ? std::vector<int>{3, 8, 9, 10, 11, 12}
                                     : std::vector<int>{3, 8, 9};
            b1.pin_first_three = true;
            b1.others_min8 = true;
            out.push_back(b1);
            CaseSpec red;
            red.d = 9;
            red.reduced = true;
            red.name = "deg_G > 9 (at most 1 neighbor of degree <= 7)";
            red.classes = pick({3, 4, 5, 7, 8, 9});  // 7 covers 6-7
            red.small_cap = 1;
            out.push_back(red);
            break;
        }
        case 10: {
            CaseSpec eq;
            eq.d = 10;
            eq.name = "deg_G = 10, 4-set exclusion active";
            eq.classes = pick({3, 4, 5, 7, 9});  // 7 covers 6-8, 9 covers 9+
            eq.x_star = true;
            out.push_back(eq);
            CaseSpec red;
            red.d = 10;
            red.reduced = true;
            red.name = "deg_G > 10 (at most 2 neighbors of degree <= 7)";
            red.classes = pick({3, 4, 5, 7, 8, 9});
            red.small_cap = 2;
            out.push_back(red);
            break;
        }
        default: {  // 11..14
            CaseSpec eq;
            eq.d = d;
            eq.name = "deg_G = " + std::to_string(d);
            eq.classes = pick({3, 4, 5, 7, 9});
            out.push_back(eq);
            CaseSpec red;
            red.d = d;
            red.reduced = true;
            red.name = "deg_G > " + std::to_string(d) + " (at most " + std::to_string(d - 8) +
                       " neighbors of degree <= 7)";
            red.classes = pick({3, 4, 5, 7, 8, 9});
            red.small_cap = d - 8;
            out.push_back(red);
            break;
        }
    }
    return out;
}

}  // namespace

Rational closed_form_min_final(int degree) {
    return Rational(degree, 2) - Rational(6);
}

std::vector<VertexCaseReport> enumerate_vertex_cases_impl(int lo, int hi, bool full_domain) {
    if (lo < 3 || hi > 14 || lo > hi)
        throw InvalidParam("enumerate_vertex_cases: degree range must sit inside 3..14");
    std::vector<VertexCaseReport> out;
    for (int d = lo; d <= hi; ++d) {
        VertexCaseReport report;
        report.degree = d;
        if (d == 3) {
            // A 3-vertex sends nothing; every incident 3-face is a
            // (3,9+,9+)-face and its charge is handled by the 9+-corners.
            report.cases.push_back(
                VertexCaseResult{d, "deg_G = 3 (sends nothing)", true, Rational(0)});
        } else if (d == 4) {
            // R1-R3 each move exactly 2 out of a 4-vertex: 2*big + 2*small
            // or 4 * 1/2.
            report.cases.push_back(VertexCaseResult{
                d, "adjacent to a 5--vertex: 2 - 2*4/5 - 2*1/5", true,
                Rational(2) - Rational(2) * Rational(4, 5) - Rational(2) * Rational(1, 5)});
            report.cases.push_back(VertexCaseResult{
                d, "adjacent to a 6-vertex: 2 - 2*2/3 - 2*1/3", true,
                Rational(2) - Rational(2) * Rational(2, 3) - Rational(2) * Rational(1, 3)});
            report.cases.push_back(VertexCaseResult{
                d, "no 6--neighbors: 2 - 4*1/2", true,
                Rational(2) - Rational(4) * Rational(1, 2)});
        } else {
            for (const CaseSpec& spec : cases_for_degree(d, full_domain)) {
                std::optional<long long> max_send;
                if (spec.five_sum) {
                    max_send = run_five(spec);
                } else {
                    Engine engine(spec);
                    max_send = engine.run();
                    if (engine.hit_unmatched)
                        throw ConstraintCatalogIncomplete(
                            "enumerate_vertex_cases: admissible 3-face with no transfer row at degree " +
                            std::to_string(d));
                }
                VertexCaseResult r;
                r.degree = d;
                r.case_name = spec.name;
                if (!max_send) {
                    r.feasible = false;
                    r.min_final_charge = Rational(2 * d - 6);
                } else {
                    r.min_final_charge = case_min_charge(d, *max_send);
                }
                report.cases.push_back(std::move(r));
            }
        }
        bool any = false;
        for (const auto& c : report.cases) {
            if (!c.feasible) continue;
            if (!any || c.min_final_charge < report.min_final_charge)
                report.min_final_charge = c.min_final_charge;
            any = true;
        }
        if (!any) report.min_final_charge = Rational(2 * d - 6);
        out.push_back(std::move(report));
    }
    return out;
}

std::vector<VertexCaseReport> enumerate_vertex_cases(int lo, int hi) {
    return enumerate_vertex_cases_impl(lo, hi, false);
}

std::vector<VertexCaseReport> enumerate_vertex_cases_full_domain(int lo, int hi) {
    return enumerate_vertex_cases_impl(lo, hi, true);
}

}  // namespace chromata
