#include <doctest.h>

#include "chromata/errors.hpp"
#include "chromata/graph.hpp"
#include "common/fixtures.hpp"

using chromata::Graph;

TEST_CASE("graph basics and invariants") {
    Graph g = fixtures::complete(4);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.max_degree() == 3);
    CHECK(g.min_degree() == 3);
    CHECK(g.has_edge(0, 3));
    CHECK(g.edge_index(1, 0) == 0);
    CHECK(g.neighbors(2) == std::vector<int>{0, 1, 3});
}

TEST_CASE("self loops and parallel edges are rejected") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), chromata::NonSimpleError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), chromata::NonSimpleError);
}

TEST_CASE("components, connectivity, cycles") {
    Graph two(6, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(two.components().size() == 3);
    CHECK_FALSE(two.connected());
    CHECK_FALSE(two.has_cycle());
    CHECK(fixtures::cycle(5).has_cycle());
    CHECK(fixtures::cycle(5).two_connected());
    CHECK_FALSE(fixtures::path(4).two_connected());
    CHECK(fixtures::complete(4).two_connected());
}

TEST_CASE("strip_small_vertices removes degree <= 2 in one pass") {
    // C4: everything is degree 2.
    CHECK(fixtures::cycle(4).strip_small_vertices().vertex_count() == 0);
    // K4: untouched.
    Graph k4s = fixtures::complete(4).strip_small_vertices();
    CHECK(k4s.vertex_count() == 4);
    CHECK(k4s.edge_count() == 6);
    // K4 with edge {0,1} subdivided through vertex 4: the subdivision vertex
    // goes, leaving K4 minus that edge.
    Graph sub(5, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    std::vector<int> kept;
    Graph stripped = sub.strip_small_vertices(&kept);
    CHECK(stripped.vertex_count() == 4);
    CHECK(stripped.edge_count() == 5);
    CHECK(kept == std::vector<int>{0, 1, 2, 3});
    CHECK_FALSE(stripped.has_edge(0, 1));
    // Single pass, not iterated: a path hanging off a triangle leaves the
    // triangle plus nothing even though stripping creates no new 2-vertices
    // here; pendant chains of 2-vertices disappear together.
    Graph lollipop(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}});
    Graph ls = lollipop.strip_small_vertices();
    CHECK(ls.vertex_count() == 1);  // only the triangle vertex of degree 3 stays
    CHECK(ls.edge_count() == 0);
}

TEST_CASE("without_edge compacts ids in order") {
    Graph g = fixtures::cycle(4);
    Graph h = g.without_edge(1);
    CHECK(h.edge_count() == 3);
    CHECK(h.edge(0) == std::pair<int, int>{0, 1});
    CHECK(h.edge(1) == std::pair<int, int>{2, 3});
}
