#include <doctest.h>

#include "capsp/tropical.hpp"

using namespace capsp;

TEST_CASE("entries act like a sparse min-plus matrix") {
    TropicalMatrix m(3);
    CHECK(m.at(1, 2) == INF);
    m.set(1, 2, 5);
    CHECK(m.at(1, 2) == 5);
    CHECK(m.finite_entries() == 1);
    m.set(1, 2, 7);  // overwrite, not min-merge
    CHECK(m.at(1, 2) == 7);
    CHECK(m.finite_entries() == 1);
    m.set(1, 2, INF);  // erase
    CHECK(m.at(1, 2) == INF);
    CHECK(m.finite_entries() == 0);
}

TEST_CASE("set_row sorts and rejects malformed rows") {
    TropicalMatrix m(4);
    m.set_row(2, {{3, 9}, {1, 4}});
    REQUIRE(m.row(2).size() == 2);
    CHECK(m.row(2)[0] == std::pair<NodeId, Weight>{1, 4});
    CHECK(m.row(2)[1] == std::pair<NodeId, Weight>{3, 9});

    CHECK_THROWS_AS(m.set_row(1, {{2, INF}}), PreconditionViolated);
    CHECK_THROWS_AS(m.set_row(1, {{2, 1}, {2, 3}}), PreconditionViolated);
    CHECK_THROWS_AS(m.set_row(1, {{5, 1}}), PreconditionViolated);
}

TEST_CASE("adjacency matrix carries a zero diagonal and both triangles") {
    Graph g(3, false, INF);
    g.add_edge(1, 2, 4);
    g.add_edge(2, 3, 1);
    TropicalMatrix a = adjacency_matrix(g);
    for (NodeId v = 1; v <= 3; ++v) CHECK(a.at(v, v) == 0);
    CHECK(a.at(1, 2) == 4);
    CHECK(a.at(2, 1) == 4);
    CHECK(a.at(3, 2) == 1);
    CHECK(a.at(1, 3) == INF);
}

TEST_CASE("min-plus product takes the best intermediate") {
    TropicalMatrix a(2), b(2);
    a.set(1, 1, 0);
    a.set(1, 2, 3);
    b.set(1, 2, 10);
    b.set(2, 2, 1);
    TropicalMatrix c = minplus_mul(a, b);
    CHECK(c.at(1, 2) == 4);   // min(0+10, 3+1)
    CHECK(c.at(2, 2) == INF); // row 2 of a is empty
}

TEST_CASE("powers close hop-bounded walks") {
    // 1 -2- 2 -3- 3 plus a heavy direct edge 1-3
    Graph g(3, false, INF);
    g.add_edge(1, 2, 2);
    g.add_edge(2, 3, 3);
    g.add_edge(1, 3, 9);
    TropicalMatrix a = adjacency_matrix(g);
    CHECK(minplus_power(a, 1).at(1, 3) == 9);
    CHECK(minplus_power(a, 2).at(1, 3) == 5);
    CHECK(minplus_power(a, 3).at(1, 3) == 5);
    CHECK_THROWS_AS(minplus_power(a, 0), PreconditionViolated);
}
