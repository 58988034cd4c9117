#include "capsp/hopset.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>
#include <unordered_map>

#include "capsp/oracle.hpp"

namespace capsp {

KNearestResult approx_knearest_sets(const ApspEstimate& delta, int k) {
    int n = delta.n();
    if (k < 1 || k > n) throw PreconditionViolated("approx_knearest_sets: k out of range");
    KNearestResult res;
    res.k = k;
    res.nearest.assign(n + 1, {});
    std::vector<std::pair<NodeId, Weight>> all(n);
    for (NodeId u = 1; u <= n; ++u) {
        for (NodeId v = 1; v <= n; ++v) all[v - 1] = {v, delta.at(u, v)};
        std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
            return std::tie(a.second, a.first) < std::tie(b.second, b.first);
        });
        res.nearest[u].assign(all.begin(), all.begin() + k);
    }
    return res;
}

std::vector<Weight> ell_radii(const Graph& g, int k) {
    KNearestResult kn = knearest_oracle(g, k);
    std::vector<Weight> ell(g.n() + 1, 0);
    for (NodeId v = 1; v <= g.n(); ++v) ell[v] = kn.nearest[v].back().second;
    return ell;
}

Hopset build_hopset(const Graph& g, const ApspEstimate& delta, double a,
                    RoundLedger& ledger) {
    if (delta.n() != g.n()) throw PreconditionViolated("build_hopset: estimate size mismatch");
    if (a < 1.0) throw PreconditionViolated("build_hopset: approximation factor below 1");
    int n = g.n();
    int k = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    k = std::min(k, n);

    KNearestResult tilde = approx_knearest_sets(delta, k);

    // each node asks every member of its candidate set for edges
    MessageBatch requests;
    for (NodeId v = 1; v <= n; ++v)
        for (const auto& [u, d] : tilde.nearest[v])
            if (u != v) requests.add_packed(v, u, {static_cast<std::uint64_t>(v)}, 1);
    route_validated(ledger, requests, 2.0, "hopset_requests");

    // the k lightest outgoing edges of each node, by (weight, neighbor id)
    const auto& arcs = g.arcs();
    std::vector<std::vector<std::pair<NodeId, Weight>>> lightest(n + 1);
    for (NodeId u = 1; u <= n; ++u) {
        std::vector<std::pair<Weight, NodeId>> by_w;
        by_w.reserve(arcs[u].size());
        for (const auto& [nbr, w] : arcs[u]) by_w.push_back({w, nbr});
        std::sort(by_w.begin(), by_w.end());
        std::size_t cnt = std::min<std::size_t>(k, by_w.size());
        for (std::size_t i = 0; i < cnt; ++i)
            lightest[u].push_back({by_w[i].second, by_w[i].first});
    }

    MessageBatch replies;
    for (NodeId v = 1; v <= n; ++v) {
        for (const auto& [u, d] : tilde.nearest[v]) {
            if (u == v) continue;
            std::vector<std::uint64_t> payload;
            payload.reserve(lightest[u].size() * 3);
            for (const auto& [nbr, w] : lightest[u]) {
                payload.push_back(static_cast<std::uint64_t>(u));
                payload.push_back(static_cast<std::uint64_t>(nbr));
                payload.push_back(w);
            }
            replies.add_packed(u, v, std::move(payload), lightest[u].size());
        }
    }
    auto inboxes = route_validated(ledger, replies, 2.0, "hopset_replies");

    // per-destination bound from the quoted analysis: k members * k edges each
    std::uint64_t cap = static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k);
    for (NodeId v = 1; v <= n; ++v) {
        std::uint64_t got = 0;
        for (const Message& m : inboxes[v]) got += m.words;
        if (got > cap)
            throw QuotaExceeded("hopset: node " + std::to_string(v) + " received " +
                                std::to_string(got) + " edge tuples, bound " +
                                std::to_string(cap));
    }

    Hopset hs;
    hs.k = k;
    Weight d_hat = delta.max_finite();
    if (d_hat < 1) d_hat = 1;
    hs.beta = 2 * (static_cast<int>(std::ceil(a * std::log(static_cast<double>(d_hat)) -
                                              1e-12)) + 1) + 1;

    // local subgraph per node: own incident edges + everything received
    MessageBatch reports;
    std::unordered_map<NodeId, std::vector<std::pair<NodeId, Weight>>> local;
    std::unordered_map<NodeId, Weight> direct;
    for (NodeId v = 1; v <= n; ++v) {
        local.clear();
        direct.clear();
        for (const auto& [nbr, w] : arcs[v]) {
            local[v].push_back({nbr, w});
            direct[nbr] = w;
        }
        for (const Message& m : inboxes[v]) {
            for (std::size_t i = 0; i + 2 < m.payload.size(); i += 3) {
                NodeId eu = static_cast<NodeId>(m.payload[i]);
                NodeId ev = static_cast<NodeId>(m.payload[i + 1]);
                local[eu].push_back({ev, m.payload[i + 2]});
            }
        }
        // Dijkstra over the collected subgraph
        std::unordered_map<NodeId, Weight> dist;
        using Item = std::pair<Weight, NodeId>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        dist[v] = 0;
        pq.push({0, v});
        while (!pq.empty()) {
            auto [d, x] = pq.top();
            pq.pop();
            auto it = dist.find(x);
            if (it == dist.end() || it->second != d) continue;
            auto lit = local.find(x);
            if (lit == local.end()) continue;
            for (const auto& [y, w] : lit->second) {
                Weight nd = sat_add(d, w);
                auto dit = dist.find(y);
                if (dit == dist.end() || nd < dit->second) {
                    dist[y] = nd;
                    pq.push({nd, y});
                }
            }
        }
        std::vector<std::pair<NodeId, Weight>> sorted(dist.begin(), dist.end());
        std::sort(sorted.begin(), sorted.end());
        for (const auto& [x, dx] : sorted) {
            if (x == v || dx == INF) continue;
            auto dit = direct.find(x);
            if (dit != direct.end() && dit->second == dx) continue;  // no new information
            hs.shortcuts.push_back({v, x, dx});
            reports.add_packed(v, x,
                               {static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(x), dx},
                               1);
        }
    }
    // shortcut endpoints learn their incoming shortcuts too
    route_validated(ledger, reports, 2.0, "hopset_shortcut_reports");
    return hs;
}

HopsetVerifyResult verify_hopset(const Graph& g, const Hopset& hs, int k, int beta) {
    HopsetVerifyResult res;
    ArcList base = ArcList::from_graph(g);
    ArcList aug = ArcList::from_graph(g, hs.shortcuts);
    KNearestResult kn = knearest_oracle(g, std::min(k, g.n()));
    for (NodeId u = 1; u <= g.n(); ++u) {
        std::vector<Weight> d_g = dijkstra(base, u);
        std::vector<Weight> d_aug = dijkstra(aug, u);
        for (NodeId v = 1; v <= g.n(); ++v) {
            if (d_aug[v] != d_g[v]) {
                return {false, u, v, "augmented graph changed the distance"};
            }
        }
        std::vector<Weight> d_beta = hop_bounded_sssp(aug, u, beta);
        for (const auto& [v, dv] : kn.nearest[u]) {
            (void)dv;
            if (d_beta[v] != d_g[v]) {
                return {false, u, v, "beta hops do not reach the exact distance"};
            }
        }
    }
    return res;
}

}  // namespace capsp
