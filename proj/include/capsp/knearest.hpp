#pragma once

#include <vector>

#include "capsp/graph.hpp"
#include "capsp/ledger.hpp"
#include "capsp/tropical.hpp"

namespace capsp {

// Row-filtered matrix: at most k finite entries per row, the k smallest by
// (value, column).
struct FilteredMatrix {
    TropicalMatrix base;
    int k = 0;
};

FilteredMatrix filter_rows(const TropicalMatrix& a, int k);

// Row filter of the adjacency matrix of g plus extra undirected edges
// (parallel edges collapse to the minimum), built row by row so the dense
// union matrix never materializes. Entrywise equal to
// filter_rows(adjacency_matrix(augment_undirected(g, extra)), k).
FilteredMatrix filtered_union_adjacency(const Graph& g,
                                        const std::vector<Edge>& extra, int k);

// Bin layout and combination-to-node assignment for one squaring round.
// Slots 0..n*k-1 hold the concatenated per-node lists (k slots per node,
// padded); bin b covers slots [start[b], start[b+1]). Combination j
// (0-based) is assigned to node j+1 and consists of a distinguished first
// bin plus h-1 further bins; combinations are enumerated in lexicographic
// order of (first, sorted rest).
struct BinAssignment {
    int p = 0;           // bin count = floor(n^(1/h) * h/4)
    int h = 0;
    long long slots = 0; // n * k
    std::vector<long long> start;              // size p+1
    std::vector<std::pair<int, std::vector<int>>> combos;
    bool degenerate = false;  // p < h or bin size <= k: broadcast fallback
};

BinAssignment make_bins(int n, int h, int k);

struct KnearestOpts {
    double c_k = 1.0;              // precondition k <= c_k * n^(1/h)
    int materialize_threshold = 512;  // full message-level simulation up to this n
};

// One filtered squaring: returns the row filter of A^h, i.e. each node's k
// nearest targets by <=h-hop paths over the filtered edge lists. Exchanges
// are validated against per-node receive quotas; above the materialization
// threshold the same loads are routed size-only and the result is computed
// algebraically (the two paths agree, which tests pin down).
FilteredMatrix knearest_one_iter(const TropicalMatrix& a, int h, int k,
                                 RoundLedger& ledger, const KnearestOpts& opts = {});

// iters repetitions: the row filter of A^(h^iters).
FilteredMatrix knearest_iter(const TropicalMatrix& a, int h, int k, int iters,
                             RoundLedger& ledger, const KnearestOpts& opts = {});

}  // namespace capsp
