#pragma once

#include <unordered_map>
#include <vector>

#include "capsp/estimate.hpp"
#include "capsp/graph.hpp"
#include "capsp/ledger.hpp"

namespace capsp {

// Skeleton graph over a hitting set S of the per-node candidate sets
// (typically the approximate k-nearest neighborhoods).
struct SkeletonGraph {
    std::vector<NodeId> nodes;                    // S, ascending original ids
    std::vector<NodeId> center;                   // center[u] for u = 1..n (original id, in S)
    std::unordered_map<NodeId, NodeId> index_of;  // original id -> quotient id 1..|S|
    Graph quotient{0, false, INF};                // skeleton edges, renumbered to 1..|S|
};

// Build the skeleton graph.
//
//  - S = hitting set of cand[1..n] (each cand[u] must contain u);
//  - center(u) = member of S inside cand[u] minimizing (delta(u,s), s);
//  - an edge (c(u), c(v)) for every pair u, v sharing a witness t in both
//    candidate sets, of weight delta(u,c(u)) + delta(u,t) + delta(v,t) +
//    delta(v,c(v)), min-aggregated.
//
// The aggregation runs as one validated route to the witnesses, a sparse
// (min,+) product of the witness matrices (product density bound |S|^2/n),
// and one validated route delivering edges to their endpoints. `delta` must
// be defined on (u, t) for every t in cand[u].
SkeletonGraph build_skeleton(const Graph& g, const PartialEstimate& delta,
                             const std::vector<std::vector<NodeId>>& cand, int k,
                             std::uint64_t seed, RoundLedger& ledger);

// Lift an APSP estimate on the quotient back to the full vertex set:
// pairs inside a candidate set take the direct estimate, every other pair
// routes through the centers: delta(u,c(u)) + D_S(c(u),c(v)) + delta(v,c(v)).
// Claimed factor: 7 * l * a^2 for quotient factor l and delta factor a.
// Charged as one validated exchange plus two sparse products of the center
// assignment matrix against D_S (both at constant round cost).
ApspEstimate lift_skeleton_apsp(const SkeletonGraph& sk, const ApspEstimate& gs,
                                const PartialEstimate& delta,
                                const std::vector<std::vector<NodeId>>& cand,
                                RoundLedger& ledger);

}  // namespace capsp
