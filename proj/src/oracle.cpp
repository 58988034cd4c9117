#include "capsp/oracle.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace capsp {

ArcList ArcList::from_graph(const Graph& g, const std::vector<Edge>& extra_arcs) {
    ArcList a;
    a.n = g.n();
    a.out = g.arcs();
    for (const Edge& e : extra_arcs) a.out[e.u].push_back({e.v, e.w});
    return a;
}

std::vector<Weight> dijkstra(const ArcList& arcs, NodeId src) {
    std::vector<Weight> dist(arcs.n + 1, INF);
    using Item = std::pair<Weight, NodeId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[src] = 0;
    pq.push({0, src});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d != dist[u]) continue;
        for (const auto& [v, w] : arcs.out[u]) {
            Weight nd = sat_add(d, w);
            if (nd < dist[v]) {
                dist[v] = nd;
                pq.push({nd, v});
            }
        }
    }
    return dist;
}

std::vector<Weight> hop_bounded_sssp(const ArcList& arcs, NodeId src, int h) {
    std::vector<Weight> cur(arcs.n + 1, INF);
    cur[src] = 0;
    std::vector<Weight> next = cur;
    for (int t = 0; t < h; ++t) {
        bool changed = false;
        for (NodeId u = 1; u <= arcs.n; ++u) {
            if (cur[u] == INF) continue;
            for (const auto& [v, w] : arcs.out[u]) {
                Weight nd = sat_add(cur[u], w);
                if (nd < next[v]) {
                    next[v] = nd;
                    changed = true;
                }
            }
        }
        cur = next;
        if (!changed) break;
    }
    return cur;
}

ApspEstimate exact_apsp(const Graph& g) {
    ArcList arcs = ArcList::from_graph(g);
    ApspEstimate est(g.n(), 1.0);
    for (NodeId s = 1; s <= g.n(); ++s) {
        std::vector<Weight> d = dijkstra(arcs, s);
        for (NodeId v = 1; v <= g.n(); ++v) est.set(s, v, d[v]);
    }
    return est;
}

TropicalMatrix hhop_distances(const Graph& g, int h) {
    if (h < 0) throw PreconditionViolated("hhop: negative hop bound");
    ArcList arcs = ArcList::from_graph(g);
    TropicalMatrix m(g.n());
    for (NodeId s = 1; s <= g.n(); ++s) {
        std::vector<Weight> d = hop_bounded_sssp(arcs, s, h);
        std::vector<std::pair<NodeId, Weight>> row;
        for (NodeId v = 1; v <= g.n(); ++v)
            if (d[v] != INF) row.push_back({v, d[v]});
        m.set_row(s, std::move(row));
    }
    return m;
}

KNearestResult knearest_oracle(const Graph& g, int k, int h) {
    if (k < 1 || k > g.n()) throw PreconditionViolated("knearest oracle: k out of range");
    ArcList arcs = ArcList::from_graph(g);
    KNearestResult res;
    res.k = k;
    res.nearest.assign(g.n() + 1, {});
    for (NodeId s = 1; s <= g.n(); ++s) {
        std::vector<Weight> d =
            (h == 0) ? dijkstra(arcs, s) : hop_bounded_sssp(arcs, s, h);
        std::vector<std::pair<NodeId, Weight>> all;
        all.reserve(g.n());
        for (NodeId v = 1; v <= g.n(); ++v) all.push_back({v, d[v]});
        std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
            return std::tie(a.second, a.first) < std::tie(b.second, b.first);
        });
        all.resize(k);
        res.nearest[s] = std::move(all);
    }
    return res;
}

}  // namespace capsp
