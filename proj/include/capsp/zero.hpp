#pragma once

#include <vector>

#include "capsp/estimate.hpp"
#include "capsp/graph.hpp"
#include "capsp/ledger.hpp"

namespace capsp {

// Result of contracting zero-weight components. leaders holds the minimum-ID
// node of each component in increasing order; quotient node i corresponds to
// leaders[i-1]. Distances are preserved: d_G(v,u) = d_quotient(comp(v), comp(u)).
struct ZeroCompression {
    Graph quotient;                 // nodes 1..|leaders|, all weights positive
    std::vector<NodeId> leaders;    // quotient id -> original leader id
    std::vector<NodeId> leader_of;  // original id -> original leader id (1..n)
    std::vector<int> quotient_of;   // original id -> quotient id

    NodeId leader(NodeId v) const { return leader_of[v]; }
    int quotient_id(NodeId v) const { return quotient_of[v]; }
};

// Contract connected components of the zero-weight subgraph (union-find over
// zero edges, which is all the spanning structure the contraction needs).
// Cross-component minimum edge weights become the quotient edges.
ZeroCompression compress_zero(const Graph& g, RoundLedger& ledger);

// Expand a quotient estimate back to the original node set:
// eta(v,u) = delta_q(comp(v), comp(u)).
ApspEstimate lift_compressed(const ApspEstimate& delta_q, const ZeroCompression& zc,
                             RoundLedger& ledger);

}  // namespace capsp
