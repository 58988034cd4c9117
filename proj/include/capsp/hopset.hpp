#pragma once

#include <string>
#include <vector>

#include "capsp/estimate.hpp"
#include "capsp/graph.hpp"
#include "capsp/ledger.hpp"

namespace capsp {

// Directed shortcut edges certifying a hop bound: in the union of the base
// graph and the shortcuts, every node reaches its k nearest nodes by a
// shortest path of at most beta edges.
struct Hopset {
    std::vector<Edge> shortcuts;  // directed u -> v, weight = real path length
    int k = 0;                    // nearest-set size the bound covers
    int beta = 0;                 // certified hop bound
};

// Per-node sets of the k nodes with smallest (delta(u,v), v): the candidate
// neighborhoods an a-approximation induces.
KNearestResult approx_knearest_sets(const ApspEstimate& delta, int k);

// Exact N_k radius per node: distance to the k-th nearest node (oracle).
std::vector<Weight> ell_radii(const Graph& g, int k);

// Build a hopset for the ceil(sqrt n)-nearest neighborhoods, given a sound
// a-approximation delta (d <= delta <= a*d). Each node pulls the sqrt(n)
// lightest edges of its candidate set's members, solves locally, and publishes
// the resulting path lengths as shortcuts. beta is derived from a and the
// largest finite delta value.
Hopset build_hopset(const Graph& g, const ApspEstimate& delta, double a,
                    RoundLedger& ledger);

struct HopsetVerifyResult {
    bool ok = true;
    NodeId u = 0, v = 0;
    std::string reason;
};

// Check (i) shortcuts never shorten any distance and (ii) every u reaches all
// of N_k(u) at its exact distance within beta hops. Returns the first
// counterexample if not.
HopsetVerifyResult verify_hopset(const Graph& g, const Hopset& hs, int k, int beta);

}  // namespace capsp
