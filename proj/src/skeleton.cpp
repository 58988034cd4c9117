#include "capsp/skeleton.hpp"

#include <algorithm>
#include <utility>

#include "capsp/hitting.hpp"
#include "capsp/spmm.hpp"
#include "capsp/tropical.hpp"

namespace capsp {

namespace {

// center(u) = argmin_{s in S ∩ cand[u]} (delta(u,s), s)
std::vector<NodeId> pick_centers(const PartialEstimate& delta,
                                 const std::vector<std::vector<NodeId>>& cand,
                                 const std::vector<char>& in_s, int n) {
    std::vector<NodeId> center(n + 1, 0);
    for (NodeId u = 1; u <= n; ++u) {
        NodeId best = 0;
        Weight best_w = INF;
        for (NodeId t : cand[u]) {
            if (!in_s[t]) continue;
            Weight w = delta.at(u, t);
            if (best == 0 || w < best_w || (w == best_w && t < best)) {
                best = t;
                best_w = w;
            }
        }
        if (best == 0)
            throw PreconditionViolated("skeleton: hitting set misses a candidate set");
        center[u] = best;
    }
    return center;
}

}  // namespace

SkeletonGraph build_skeleton(const Graph& g, const PartialEstimate& delta,
                             const std::vector<std::vector<NodeId>>& cand, int k,
                             std::uint64_t seed, RoundLedger& ledger) {
    const int n = g.n();
    if (static_cast<int>(cand.size()) != n + 1)
        throw PreconditionViolated("skeleton: candidate sets must cover nodes 1..n");

    SkeletonGraph sk;
    sk.nodes = hitting_set(cand, k, seed, ledger);
    std::vector<char> in_s(n + 1, 0);
    for (std::size_t i = 0; i < sk.nodes.size(); ++i) {
        in_s[sk.nodes[i]] = 1;
        sk.index_of[sk.nodes[i]] = static_cast<NodeId>(i + 1);
    }
    sk.center = pick_centers(delta, cand, in_s, n);

    // Route 1: u tells every witness t in cand[u] the pair
    // (center(u), delta(u,center(u)) + delta(u,t)), and every graph neighbor
    // the same with the edge weight in place of delta(u,t). The neighbor
    // tuples project each real edge onto a skeleton edge between the
    // endpoint centers, so the skeleton never disconnects nodes the graph
    // connects. One tuple = one word.
    MessageBatch wit;
    for (NodeId u = 1; u <= n; ++u) {
        Weight du = delta.at(u, sk.center[u]);
        if (du == INF) continue;  // unreachable center: nothing informative to send
        for (NodeId t : cand[u]) {
            if (t == u) continue;
            Weight dut = delta.at(u, t);
            if (dut == INF) continue;
            wit.add_packed(u, t, {static_cast<std::uint64_t>(sk.center[u]),
                                  sat_add(du, dut)},
                           1);
        }
        for (const auto& [v, w] : g.arcs()[u]) {
            if (v == u) continue;
            wit.add_packed(u, v, {static_cast<std::uint64_t>(sk.center[u]),
                                  sat_add(du, w)},
                           1);
        }
    }
    auto inbox = route_validated(ledger, wit, ledger.quota_c(), "skeleton_witness");

    // Witness t folds what it heard (plus its own center) into row t of Y;
    // X is the transpose, so the same traffic feeds both product operands.
    TropicalMatrix x(n), y(n);
    std::vector<std::vector<std::pair<NodeId, Weight>>> x_rows(n + 1);
    for (NodeId t = 1; t <= n; ++t) {
        std::unordered_map<NodeId, Weight> fold;
        if (Weight dt = delta.at(t, sk.center[t]); dt != INF) fold[sk.center[t]] = dt;
        for (const Message& m : inbox[t]) {
            NodeId s = static_cast<NodeId>(m.payload[0]);
            Weight w = m.payload[1];
            auto it = fold.find(s);
            if (it == fold.end() || w < it->second) fold[s] = w;
        }
        std::vector<std::pair<NodeId, Weight>> row(fold.begin(), fold.end());
        std::sort(row.begin(), row.end());
        for (const auto& [s, w] : row) x_rows[s].push_back({t, w});
        y.set_row(t, std::move(row));
    }
    for (NodeId s = 1; s <= n; ++s)
        if (!x_rows[s].empty()) x.set_row(s, std::move(x_rows[s]));

    const double s_count = static_cast<double>(sk.nodes.size());
    TropicalMatrix gsm =
        sparse_minplus_mul(x, y, s_count * s_count / n, ledger, "skeleton_product");

    // Route 2: each skeleton edge travels to both endpoints.
    MessageBatch ret;
    for (NodeId sa : sk.nodes)
        for (const auto& [sb, w] : gsm.row(sa)) {
            if (sb == sa) continue;
            ret.add_packed(sa, sb, {static_cast<std::uint64_t>(sa), w}, 1);
        }
    route_validated(ledger, ret, ledger.quota_c(), "skeleton_edges");

    Graph q(static_cast<int>(sk.nodes.size()), false, INF);
    for (NodeId sa : sk.nodes)
        for (const auto& [sb, w] : gsm.row(sa))
            if (sa < sb) q.add_edge(sk.index_of.at(sa), sk.index_of.at(sb), w);
    sk.quotient = std::move(q);
    return sk;
}

ApspEstimate lift_skeleton_apsp(const SkeletonGraph& sk, const ApspEstimate& gs,
                                const PartialEstimate& delta,
                                const std::vector<std::vector<NodeId>>& cand,
                                RoundLedger& ledger) {
    const int n = delta.n();
    const int ns = static_cast<int>(sk.nodes.size());
    if (gs.n() != ns)
        throw PreconditionViolated("skeleton lift: estimate does not match the quotient");
    if (static_cast<int>(cand.size()) != n + 1)
        throw PreconditionViolated("skeleton lift: candidate sets must cover nodes 1..n");

    // Candidate pairs swap their direct estimates (one word per pair).
    MessageBatch ex;
    for (NodeId v = 1; v <= n; ++v)
        for (NodeId t : cand[v]) {
            if (t == v) continue;
            Weight w = delta.at(v, t);
            if (w == INF) continue;
            ex.add_packed(v, t, {static_cast<std::uint64_t>(v), w}, 1);
        }
    route_validated(ledger, ex, ledger.quota_c(), "skeleton_lift_exchange");

    // Two sparse products against the center assignment matrix A
    // (A[c(v)][v] = delta(v,c(v)), one finite entry per column): first
    // D_S * A, then its transpose against the result. Only the round charge
    // depends on the density profile; both land at the constant floor.
    std::vector<NodeId> cidx(n + 1, 0);
    std::vector<Weight> dcent(n + 1, INF);
    for (NodeId v = 1; v <= n; ++v) {
        cidx[v] = sk.index_of.at(sk.center[v]);
        dcent[v] = delta.at(v, sk.center[v]);
    }
    std::vector<std::uint64_t> row_fin(ns + 1, 0), col_fin(ns + 1, 0);
    for (NodeId i = 1; i <= ns; ++i)
        for (NodeId j = 1; j <= ns; ++j)
            if (gs.at(i, j) != INF) {
                ++row_fin[i];
                ++col_fin[j];
            }
    std::uint64_t d_cnt = 0;
    for (NodeId i = 1; i <= ns; ++i) d_cnt += row_fin[i];
    std::vector<std::uint64_t> centered(ns + 1, 0);  // #v assigned to quotient id j
    for (NodeId v = 1; v <= n; ++v) ++centered[cidx[v]];
    std::uint64_t out1_cnt = 0, out2_cnt = 0;
    for (NodeId v = 1; v <= n; ++v) out1_cnt += col_fin[cidx[v]];
    for (NodeId i = 1; i <= ns; ++i) {
        std::uint64_t w = 0;
        for (NodeId j = 1; j <= ns; ++j)
            if (gs.at(i, j) != INF) w += centered[j];
        out2_cnt += w * centered[i];
    }
    const double dn = n;
    ledger.charge("skeleton_lift_da",
                  sparse_mul_rounds(d_cnt / dn, 1.0, out1_cnt / dn, n));
    ledger.charge("skeleton_lift_ada",
                  sparse_mul_rounds(1.0, out1_cnt / dn, out2_cnt / dn, n));

    ApspEstimate eta(n, 7.0 * gs.claimed_factor() * delta.claimed_factor() *
                            delta.claimed_factor());
    for (NodeId u = 1; u <= n; ++u) {
        Weight du = dcent[u];
        NodeId iu = cidx[u];
        for (NodeId v = 1; v <= n; ++v) {
            if (v == u) continue;
            eta.set(u, v, sat_add(sat_add(du, gs.at(iu, cidx[v])), dcent[v]));
        }
    }
    // Candidate pairs fold their direct estimate into both orientations; the
    // near-pair case of the lifting bound is carried by this branch.
    for (NodeId v = 1; v <= n; ++v)
        for (NodeId t : cand[v]) {
            if (t == v) continue;
            Weight w = delta.at(v, t);
            if (w == INF) continue;
            if (w < eta.at(v, t)) eta.set(v, t, w);
            if (w < eta.at(t, v)) eta.set(t, v, w);
        }
    return eta;
}

}  // namespace capsp
