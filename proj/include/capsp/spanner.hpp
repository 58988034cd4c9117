#pragma once

#include <string>
#include <vector>

#include "capsp/estimate.hpp"
#include "capsp/graph.hpp"
#include "capsp/ledger.hpp"

namespace capsp {

struct SpannerResult {
    std::vector<Edge> edges;  // subset of the input's edges
    int k = 1;
    std::string variant = "plain";  // plain | eps
    double eps = 0.0;
    double stretch = 1.0;   // guaranteed multiplicative stretch
    std::size_t repairs = 0;  // edges re-added by the post-construction audit
};

// (2k-1)-spanner via randomized clustering (sampled cluster levels, lightest-
// edge joins), followed by an exhaustive per-edge audit that re-adds any edge
// whose stretch bound is not met, so the stretch guarantee is deterministic.
// variant "eps" compares edges by (1+eps) weight class and guarantees
// (1+eps)(2k-1); "plain" guarantees 2k-1. k == 1 returns all edges.
SpannerResult spanner(const Graph& g, int k, const std::string& variant, double eps,
                      std::uint64_t seed, RoundLedger& ledger);

// Build a spanner of gs, broadcast it, and return its exact distances as a
// (1+eps)(2b-1)-approximation of d_GS. SizeViolation if the spanner exceeds
// budget_c * n words of broadcast budget.
ApspEstimate spanner_apsp(const Graph& gs, int b, double eps, std::uint64_t seed,
                          RoundLedger& ledger, double budget_c = 64.0);

// O(1)-round (alpha * log2 n)-approximation: spanner_apsp with
// b = floor(alpha*log2(n)/3), eps = 0.1. Falls back to exact distances via
// a full-graph broadcast when alpha*log2(n) < 3.
ApspEstimate logn_apsp(const Graph& g, double alpha, std::uint64_t seed,
                       RoundLedger& ledger);

}  // namespace capsp
