#include "capsp/zero.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace capsp {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // smaller id becomes the root so leaders are minimum-ID nodes
        if (a > b) std::swap(a, b);
        parent[b] = a;
    }
};

}  // namespace

ZeroCompression compress_zero(const Graph& g, RoundLedger& ledger) {
    if (g.directed()) throw PreconditionViolated("compress_zero: undirected input required");
    int n = g.n();
    UnionFind uf(n);
    for (const Edge& e : g.edges())
        if (e.w == 0) uf.unite(e.u, e.v);
    // Spanning structure of the zero subgraph; charged as one round per the
    // O(1)-round connectivity bound this step stands in for.
    ledger.charge("zero_components", 1);

    ZeroCompression zc;
    zc.leader_of.assign(n + 1, 0);
    zc.quotient_of.assign(n + 1, 0);
    for (NodeId v = 1; v <= n; ++v) {
        zc.leader_of[v] = uf.find(v);
        if (zc.leader_of[v] == v) zc.leaders.push_back(v);
    }
    // leaders are emitted in increasing order already
    std::unordered_map<NodeId, int> qid;
    for (std::size_t i = 0; i < zc.leaders.size(); ++i)
        qid[zc.leaders[i]] = static_cast<int>(i) + 1;
    for (NodeId v = 1; v <= n; ++v) zc.quotient_of[v] = qid[zc.leader_of[v]];

    // Minimum cross-component weight per leader pair; every surviving edge is
    // positive because zero edges are internal by construction.
    std::unordered_map<std::uint64_t, Weight> best;
    for (const Edge& e : g.edges()) {
        int a = zc.quotient_of[e.u], b = zc.quotient_of[e.v];
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        std::uint64_t k = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
        auto it = best.find(k);
        if (it == best.end() || e.w < it->second) best[k] = e.w;
    }
    Graph q(static_cast<int>(zc.leaders.size()), false, g.weight_cap());
    for (const auto& [k, w] : best)
        q.add_edge(static_cast<NodeId>(k >> 32), static_cast<NodeId>(k & 0xffffffffULL), w);
    zc.quotient = std::move(q);
    ledger.charge("zero_quotient_edges", 1);
    return zc;
}

ApspEstimate lift_compressed(const ApspEstimate& delta_q, const ZeroCompression& zc,
                             RoundLedger& ledger) {
    int n = static_cast<int>(zc.leader_of.size()) - 1;
    if (delta_q.n() != static_cast<int>(zc.leaders.size()))
        throw PreconditionViolated("lift_compressed: estimate size mismatch");
    ApspEstimate eta(n, delta_q.claimed_factor());
    for (NodeId v = 1; v <= n; ++v)
        for (NodeId u = 1; u <= n; ++u)
            eta.set(v, u, delta_q.at(zc.quotient_of[v], zc.quotient_of[u]));
    // leaders fan the component's distance row back out to members
    ledger.charge("zero_lift", 1);
    return eta;
}

}  // namespace capsp
