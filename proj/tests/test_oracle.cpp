#include <doctest.h>

#include "capsp/oracle.hpp"

using namespace capsp;

namespace {

// Independent reference: Floyd-Warshall over the dense adjacency, written
// without reusing any library matrix code.
std::vector<std::vector<Weight>> floyd_warshall(const Graph& g) {
    int n = g.n();
    std::vector<std::vector<Weight>> d(n + 1, std::vector<Weight>(n + 1, INF));
    for (NodeId v = 1; v <= n; ++v) d[v][v] = 0;
    for (const Edge& e : g.edges()) {
        if (e.w < d[e.u][e.v]) d[e.u][e.v] = e.w;
        if (!g.directed() && e.w < d[e.v][e.u]) d[e.v][e.u] = e.w;
    }
    for (NodeId k = 1; k <= n; ++k)
        for (NodeId i = 1; i <= n; ++i) {
            if (d[i][k] == INF) continue;
            for (NodeId j = 1; j <= n; ++j) {
                if (d[k][j] == INF) continue;
                Weight via = d[i][k] + d[k][j];
                if (via < d[i][j]) d[i][j] = via;
            }
        }
    return d;
}

}  // namespace

TEST_CASE("exact distances agree with an independent dense solver") {
    for (std::uint64_t seed : {1, 2, 3}) {
        Graph g = gen_graph(GenSpec::parse("erdos_renyi:20:0.18:w=1-40"), seed);
        ApspEstimate est = exact_apsp(g);
        auto ref = floyd_warshall(g);
        CHECK(est.claimed_factor() == 1.0);
        for (NodeId u = 1; u <= g.n(); ++u)
            for (NodeId v = 1; v <= g.n(); ++v)
                CHECK(est.at(u, v) == ref[u][v]);
    }
}

TEST_CASE("hop-bounded distances are monotone in h and reach the true distance") {
    Graph g = gen_graph(GenSpec::parse("erdos_renyi:16:0.25:w=1-30"), 9);
    ArcList arcs = ArcList::from_graph(g);
    auto exact = dijkstra(arcs, 1);
    std::vector<Weight> prev(g.n() + 1, INF);
    prev[1] = 0;
    for (int h = 1; h <= g.n(); ++h) {
        auto cur = hop_bounded_sssp(arcs, 1, h);
        for (NodeId v = 1; v <= g.n(); ++v) {
            CHECK(cur[v] <= prev[v]);
            CHECK(cur[v] >= exact[v]);
        }
        prev = cur;
    }
    // n-1 hops suffice on n nodes
    for (NodeId v = 1; v <= g.n(); ++v) CHECK(prev[v] == exact[v]);
}

TEST_CASE("h-hop matrix equals the h-th adjacency power") {
    Graph g = gen_graph(GenSpec::parse("erdos_renyi:14:0.3:w=1-20"), 4);
    TropicalMatrix a = adjacency_matrix(g);
    for (int h : {1, 2, 4}) {
        TropicalMatrix d = hhop_distances(g, h);
        TropicalMatrix p = minplus_power(a, h);
        CHECK(d == p);
    }
}

TEST_CASE("extra arcs are directed as given") {
    Graph g(3, false, INF);
    g.add_edge(1, 2, 10);
    g.add_edge(2, 3, 10);
    ArcList arcs = ArcList::from_graph(g, {{3, 1, 1}});
    auto from3 = dijkstra(arcs, 3);
    auto from1 = dijkstra(arcs, 1);
    CHECK(from3[1] == 1);    // uses the shortcut
    CHECK(from1[3] == 20);   // shortcut does not run backwards
}

TEST_CASE("k-nearest oracle breaks ties by id and respects the hop bound") {
    // star with unit spokes: from node 2 everything beyond the center is at 2
    Graph g = gen_graph(GenSpec::parse("star:5"), 1);
    KNearestResult r = knearest_oracle(g, 4);
    REQUIRE(r.nearest[2].size() == 4);
    CHECK(r.nearest[2][0] == std::pair<NodeId, Weight>{2, 0});
    CHECK(r.nearest[2][1] == std::pair<NodeId, Weight>{1, 1});
    // ties at distance 2 resolve toward smaller ids
    CHECK(r.nearest[2][2] == std::pair<NodeId, Weight>{3, 2});
    CHECK(r.nearest[2][3] == std::pair<NodeId, Weight>{4, 2});

    // with a single hop the far leaves are unreachable from a leaf; the list
    // keeps its k slots but pads with INF entries
    KNearestResult h1 = knearest_oracle(g, 4, 1);
    REQUIRE(h1.nearest[2].size() == 4);
    CHECK(h1.nearest[2][0].first == 2);
    CHECK(h1.nearest[2][1].first == 1);
    CHECK(h1.nearest[2][2].second == INF);
    CHECK(h1.nearest[2][3].second == INF);
}
