#pragma once

#include <vector>

#include "capsp/estimate.hpp"
#include "capsp/graph.hpp"
#include "capsp/tropical.hpp"
#include "capsp/types.hpp"

namespace capsp {

// Arc list form used by the sequential solvers; undirected edges appear in
// both directions. extra arcs (e.g. shortcut edges) are directed as given.
struct ArcList {
    int n = 0;
    std::vector<std::vector<std::pair<NodeId, Weight>>> out;  // 1..n

    static ArcList from_graph(const Graph& g, const std::vector<Edge>& extra_arcs = {});
};

std::vector<Weight> dijkstra(const ArcList& arcs, NodeId src);

// Hop-bounded single source: shortest path using at most h edges.
std::vector<Weight> hop_bounded_sssp(const ArcList& arcs, NodeId src, int h);

// Exact all-pairs distances (Dijkstra per source), claimed factor 1.
ApspEstimate exact_apsp(const Graph& g);

// D[u,v] = shortest u->v path using at most h edges (diagonal 0).
TropicalMatrix hhop_distances(const Graph& g, int h);

// k smallest entries per node by (distance, id) from the given distance rows;
// h == 0 means unbounded (true distances). Requires 1 <= k <= n.
KNearestResult knearest_oracle(const Graph& g, int k, int h = 0);

}  // namespace capsp
