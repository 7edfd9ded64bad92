#include <doctest.h>

#include <algorithm>

#include "chromata/embedding.hpp"
#include "chromata/errors.hpp"
#include "chromata/small_graphs.hpp"
#include "common/fixtures.hpp"
#include "common/oracles.hpp"

using namespace chromata;

namespace {

PlaneEmbedding expect_planar(PlanarityResult r) {
    REQUIRE(std::holds_alternative<PlaneEmbedding>(r));
    return std::get<PlaneEmbedding>(std::move(r));
}

}  // namespace

TEST_CASE("K4 embeds with four triangular faces") {
    auto result = embed_planar(fixtures::complete(4));
    const auto emb = expect_planar(result);
    CHECK(emb.face_count() == 4);
    for (const auto& info : face_signatures(emb)) {
        CHECK(info.degree == 3);
        CHECK(info.signature == std::vector<int>{3, 3, 3});
    }
}

TEST_CASE("K5 yields a witness containing all ten edges") {
    auto result = embed_planar(fixtures::complete(5));
    REQUIRE(std::holds_alternative<NonPlanarWitness>(result));
    CHECK(std::get<NonPlanarWitness>(result).edges.size() == 10);
}

TEST_CASE("K33 yields a witness") {
    auto result = embed_planar(fixtures::complete_bipartite(3, 3));
    REQUIRE(std::holds_alternative<NonPlanarWitness>(result));
    CHECK(std::get<NonPlanarWitness>(result).edges.size() == 9);
}

TEST_CASE("cube has six quadrilateral faces") {
    const auto emb = expect_planar(embed_planar(fixtures::cube_q3()));
    CHECK(emb.face_count() == 6);
    for (const auto& info : face_signatures(emb)) {
        CHECK(info.degree == 4);
        CHECK(info.signature == std::vector<int>{3, 3, 3, 3});
    }
}

TEST_CASE("pendant edge is walked twice: outer face degree 5") {
    // Triangle 0-1-2 with pendant vertex 3 on 0. Hand-traced rotation: the
    // face containing the pendant dart covers both its directions, so one
    // face has degree 3 and the other degree 5 with vertex 0 visited twice.
    Graph g(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
    const auto emb = expect_planar(embed_planar(g));
    std::vector<int> degs = emb.face_degrees;
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{3, 5});
    for (const auto& info : face_signatures(emb)) {
        if (info.degree == 5) CHECK(info.signature == std::vector<int>{1, 2, 2, 3, 3});
    }
}

TEST_CASE("build_embedding rejects rotations that break Euler") {
    // K4 rotation with two swapped entries at one vertex embeds on the
    // torus, not the sphere.
    Graph g = fixtures::complete(4);
    auto result = embed_planar(g);
    auto emb = std::get<PlaneEmbedding>(result);
    auto rot = emb.rotation;
    std::swap(rot[0][0], rot[0][1]);
    CHECK_THROWS_AS(build_embedding(g, rot), InvalidParam);
}

TEST_CASE("disconnected graphs embed per component") {
    Graph g(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});  // two triangles + isolate
    const auto emb = expect_planar(embed_planar(g));
    // Per component: triangle has 2 faces, the isolated vertex 1.
    CHECK(emb.face_count() == 5);
    CHECK(emb.component_vertices.size() == 3);
}

TEST_CASE("embed_planar agrees with the Kuratowski-subdivision oracle on n <= 6") {
    int checked = 0;
    for (const Graph& g : all_graphs_up_to(6)) {
        bool mine = is_planar(g);
        bool oracle = oracles::planar_by_kuratowski_up_to_6(g);
        CHECK_MESSAGE(mine == oracle, "disagreement on a graph with n=", g.vertex_count(),
                      " m=", g.edge_count());
        if (mine != oracle) break;
        ++checked;
    }
    CHECK(checked == 208);  // 1+2+4+11+34+156 isomorphism classes on n <= 6
}

TEST_CASE("faces_at_vertex and faces_at_edge line up with the face list") {
    const auto emb = expect_planar(embed_planar(fixtures::complete(4)));
    for (int v = 0; v < 4; ++v) {
        auto faces = emb.faces_at_vertex(v);
        CHECK(faces.size() == 3);  // degree 3, all distinct faces at a K4 vertex
    }
    for (int e = 0; e < emb.graph.edge_count(); ++e) {
        auto [fa, fb] = emb.faces_at_edge(e);
        CHECK(fa >= 0);
        CHECK(fb >= 0);
        CHECK(fa != fb);
    }
}
