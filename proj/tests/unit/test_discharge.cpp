#include <doctest.h>

#include <set>

#include "chromata/discharge.hpp"
#include "chromata/embedding.hpp"
#include "chromata/errors.hpp"
#include "chromata/random_planar.hpp"
#include "common/fixtures.hpp"

using namespace chromata;

namespace {

PlaneEmbedding embed(const Graph& g) {
    auto r = embed_planar(g);
    REQUIRE(std::holds_alternative<PlaneEmbedding>(r));
    return std::get<PlaneEmbedding>(r);
}

}  // namespace

TEST_CASE("initial charges: the Euler identity in exact rationals") {
    // tetrahedron: 4 vertices at 0, 4 faces at -3
    ChargeState tetra = initial_charges(embed(fixtures::complete(4)));
    for (const auto& c : tetra.vertex_charge) CHECK(c == Rational(0));
    for (const auto& c : tetra.face_charge) CHECK(c == Rational(-3));
    CHECK(tetra.total() == Rational(-12));

    // cube: 8 vertices at 0, 6 faces at -2
    ChargeState cube = initial_charges(embed(fixtures::cube_q3()));
    for (const auto& c : cube.face_charge) CHECK(c == Rational(-2));
    CHECK(cube.total() == Rational(-12));

    // icosahedron: 12 vertices at 4, 20 faces at -3
    ChargeState ico = initial_charges(embed(fixtures::icosahedron()));
    CHECK(ico.vertex_charge.size() == 12);
    CHECK(ico.face_charge.size() == 20);
    for (const auto& c : ico.vertex_charge) CHECK(c == Rational(4));
    CHECK(ico.total() == Rational(-12));

    // dodecahedron
    CHECK(initial_charges(embed(fixtures::dodecahedron())).total() == Rational(-12));
}

TEST_CASE("initial_charges refuses disconnected embeddings") {
    Graph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_THROWS_AS(initial_charges(embed(two)), DisconnectedInput);
    // formula charges still total -12 per component
    CHECK(formula_charges(embed(two)).total() == Rational(-24));
}

TEST_CASE("builtin rule queries reproduce the transfer table") {
    DischargeRuleSet rules = DischargeRuleSet::builtin();
    // 9-vertex on a (3,9,9)-face sends 3/2.
    CHECK(rules.query(9, std::pair<int, int>{3, 9}) == Rational(3, 2));
    // 4-vertex beside a 5--vertex sends 4/5 into faces on that edge.
    CHECK(rules.query(4, std::nullopt, SenderCtx::adj5minus, SenderCtx::any,
                      EdgeIncidence::with_special_edge) == Rational(4, 5));
    // 3-vertices never send.
    CHECK(rules.query(3, std::pair<int, int>{9, 9}) == Rational(0));
    CHECK(rules.query(3, std::nullopt) == Rational(0));
    // a few table spot checks
    CHECK(rules.query(11, std::pair<int, int>{4, 5}) == Rational(27, 20));
    CHECK(rules.query(5, std::pair<int, int>{4, 11}) == Rational(17, 20));
    CHECK(rules.query(5, std::pair<int, int>{7, 8}) == Rational(17, 28));
    CHECK(rules.query(7, std::pair<int, int>{5, 8}) == Rational(8, 7));
    CHECK(rules.query(8, std::pair<int, int>{5, 5}) == Rational(5, 4));
    CHECK(rules.query(10, std::pair<int, int>{4, 4}) == Rational(7, 5));
    CHECK(rules.query(6, std::pair<int, int>{4, 10}) == Rational(1));
    CHECK(rules.query(12, std::pair<int, int>{6, 7}) == Rational(1));
    CHECK(rules.query(9, std::pair<int, int>{4, 9}, SenderCtx::any, SenderCtx::no_adj6minus) ==
          Rational(5, 4));
    CHECK(rules.query(9, std::pair<int, int>{4, 9}, SenderCtx::any, SenderCtx::adj5minus) ==
          Rational(7, 5));
    // 4+-face transfers
    CHECK(rules.query(9, std::nullopt) == Rational(1));
    CHECK(rules.query(6, std::nullopt) == Rational(1, 2));
}

TEST_CASE("every 3-face row family sums to 3") {
    DischargeRuleSet rules = DischargeRuleSet::builtin();
    auto sum3 = [&](int a, int b, int c, SenderCtx actx = SenderCtx::any,
                    SenderCtx bctx = SenderCtx::any, SenderCtx cctx = SenderCtx::any) {
        return rules.query(a, std::pair<int, int>{b, c}, actx, bctx) +
               rules.query(b, std::pair<int, int>{a, c}, bctx, actx) +
               rules.query(c, std::pair<int, int>{a, b}, cctx, actx);
    };
    // Signatures instantiated at concrete degrees; the 4-vertex contributes
    // through R1-R3 with its context.
    CHECK(sum3(3, 9, 9) == Rational(3));
    CHECK(sum3(5, 5, 5) == Rational(3));
    CHECK(sum3(5, 5, 8) == Rational(3));
    CHECK(sum3(5, 6, 6) == Rational(3));
    CHECK(sum3(5, 6, 7) == Rational(3));
    CHECK(sum3(5, 6, 9) == Rational(3));
    CHECK(sum3(5, 7, 7) == Rational(3));
    CHECK(sum3(5, 7, 10) == Rational(3));
    CHECK(sum3(5, 8, 8) == Rational(3));
    CHECK(sum3(6, 6, 6) == Rational(3));
    CHECK(sum3(7, 8, 9) == Rational(3));
    // Rows with a 4-vertex: add its R1/R2/R3 send explicitly.
    auto four_on_face = [&](SenderCtx ctx, EdgeIncidence inc) {
        return rules.query(4, std::nullopt, ctx, SenderCtx::any, inc);
    };
    // (4,4,10+): each 4 sits beside the other 4 (a 5--vertex), so both send 4/5.
    CHECK(four_on_face(SenderCtx::adj5minus, EdgeIncidence::with_special_edge) * Rational(2) +
              rules.query(10, std::pair<int, int>{4, 4}) ==
          Rational(3));
    // (4,5,11)
    CHECK(four_on_face(SenderCtx::adj5minus, EdgeIncidence::with_special_edge) +
              rules.query(5, std::pair<int, int>{4, 11}) +
              rules.query(11, std::pair<int, int>{4, 5}) ==
          Rational(3));
    // (4,6,10+)
    CHECK(four_on_face(SenderCtx::adj6, EdgeIncidence::with_special_edge) +
              rules.query(6, std::pair<int, int>{4, 10}) +
              rules.query(10, std::pair<int, int>{4, 6}) ==
          Rational(3));
    // (4,7,8)
    CHECK(four_on_face(SenderCtx::no_adj6minus, EdgeIncidence::any) +
              rules.query(7, std::pair<int, int>{4, 8}) +
              rules.query(8, std::pair<int, int>{4, 7}) ==
          Rational(3));
    // (4,9+,9+) in all three contexts
    CHECK(four_on_face(SenderCtx::adj5minus, EdgeIncidence::without_special_edge) +
              Rational(2) * rules.query(9, std::pair<int, int>{4, 9}, SenderCtx::any,
                                        SenderCtx::adj5minus) ==
          Rational(3));
    CHECK(four_on_face(SenderCtx::adj6, EdgeIncidence::without_special_edge) +
              Rational(2) *
                  rules.query(9, std::pair<int, int>{4, 9}, SenderCtx::any, SenderCtx::adj6) ==
          Rational(3));
    CHECK(four_on_face(SenderCtx::no_adj6minus, EdgeIncidence::any) +
              Rational(2) * rules.query(9, std::pair<int, int>{4, 9}, SenderCtx::any,
                                        SenderCtx::no_adj6minus) ==
          Rational(3));
}

TEST_CASE("verify_identities: every closed-form line replays exactly") {
    auto checks = verify_identities();
    CHECK(checks.size() >= 30);
    for (const auto& c : checks) CHECK_MESSAGE(c.pass, c.id);
}

TEST_CASE("apply_rules on the icosahedron: faces close, vertices go negative") {
    PlaneEmbedding emb = embed(fixtures::icosahedron());
    DischargeRuleSet rules = DischargeRuleSet::builtin();
    ApplyResult applied = apply_rules(emb, rules);
    // every (5,5,5)-face receives 3 x 1, every 5-vertex pays 5 x 1
    for (const auto& c : applied.final_state.face_charge) CHECK(c == Rational(0));
    for (const auto& c : applied.final_state.vertex_charge) CHECK(c == Rational(-1));
    CHECK(applied.final_state.total() == Rational(-12));

    AuditReport report = audit_embedding(emb, rules);
    CHECK(report.total_initial == Rational(-12));
    CHECK(report.negatives.size() == 12);
    for (const auto& n : report.negatives) {
        CHECK(n.is_vertex);
        CHECK(n.final_charge == Rational(-1));
        CHECK(n.fired.size() == 5);
    }
}

TEST_CASE("apply_rules on the tetrahedron: no rows fire, faces stay at -3") {
    PlaneEmbedding emb = embed(fixtures::complete(4));
    ApplyResult applied = apply_rules(emb, DischargeRuleSet::builtin());
    CHECK(applied.trace.empty());
    for (const auto& c : applied.final_state.face_charge) CHECK(c == Rational(-3));
    CHECK(applied.final_state.total() == Rational(-12));
}

TEST_CASE("charge conservation holds on random planar embeddings") {
    DischargeRuleSet rules = DischargeRuleSet::builtin();
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = random_planar(24, Rational(1), seed);
        PlaneEmbedding emb = embed(g);
        ApplyResult applied = apply_rules(emb, rules);
        CHECK(applied.final_state.total() == formula_charges(emb).total());
        CHECK(applied.final_state.total() == Rational(-12));
    }
}

TEST_CASE("rule DSL round-trips the builtin set") {
    DischargeRuleSet rules = DischargeRuleSet::builtin();
    std::string dsl = rules.to_dsl();
    DischargeRuleSet back = DischargeRuleSet::from_dsl(dsl);
    REQUIRE(back.rules.size() == rules.rules.size());
    for (std::size_t i = 0; i < rules.rules.size(); ++i) {
        CHECK(back.rules[i].amount == rules.rules[i].amount);
        CHECK(back.rules[i].sender.lo == rules.rules[i].sender.lo);
        CHECK(back.rules[i].sender.hi == rules.rules[i].sender.hi);
        CHECK(back.rules[i].ctx == rules.rules[i].ctx);
        CHECK(back.rules[i].face == rules.rules[i].face);
        CHECK(back.rules[i].incidence == rules.rules[i].incidence);
        CHECK(back.rules[i].anchor == rules.rules[i].anchor);
    }
    CHECK(back.to_dsl() == dsl);
}

TEST_CASE("rule matching is order independent") {
    PlaneEmbedding emb = embed(fixtures::icosahedron());
    DischargeRuleSet rules = DischargeRuleSet::builtin();
    DischargeRuleSet shuffled;
    for (std::size_t i = rules.rules.size(); i > 0; --i)
        shuffled.rules.push_back(rules.rules[i - 1]);
    ApplyResult a = apply_rules(emb, rules);
    ApplyResult b = apply_rules(emb, shuffled);
    REQUIRE(a.trace.size() == b.trace.size());
    // Same transfers regardless of row order.
    std::multiset<std::string> ta, tb;
    for (const auto& f : a.trace)
        ta.insert(std::to_string(f.vertex) + "/" + std::to_string(f.face) + "/" + f.amount.str());
    for (const auto& f : b.trace)
        tb.insert(std::to_string(f.vertex) + "/" + std::to_string(f.face) + "/" + f.amount.str());
    CHECK(ta == tb);
}

TEST_CASE("two overlapping file rules raise AmbiguousRuleMatch with both anchors") {
    PlaneEmbedding emb = embed(fixtures::icosahedron());
    DischargeRuleSet rules = DischargeRuleSet::from_dsl(
        "sender: 5 ; face: 3(5,5) ; amount: 1 ; anchor: row one\n"
        "sender: 5-6 ; face: 3(5,5-7) ; amount: 1/2 ; anchor: row two\n");
    try {
        apply_rules(emb, rules);
        FAIL("expected AmbiguousRuleMatch");
    } catch (const AmbiguousRuleMatch& e) {
        std::string msg = e.what();
        CHECK(msg.find("row one") != std::string::npos);
        CHECK(msg.find("row two") != std::string::npos);
    }
}
