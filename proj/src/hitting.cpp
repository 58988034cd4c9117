#include "capsp/hitting.hpp"

#include <algorithm>
#include <cmath>

#include "capsp/rng.hpp"

namespace capsp {

std::vector<NodeId> hitting_set(const std::vector<std::vector<NodeId>>& sets, int k,
                                std::uint64_t seed, RoundLedger& ledger) {
    int n = static_cast<int>(sets.size()) - 1;
    if (n < 1) throw PreconditionViolated("hitting_set: empty instance");
    if (k < 1) throw PreconditionViolated("hitting_set: k must be >= 1");
    for (NodeId v = 1; v <= n; ++v) {
        if (std::find(sets[v].begin(), sets[v].end(), v) == sets[v].end())
            throw PreconditionViolated("hitting_set: set of node " + std::to_string(v) +
                                       " does not contain the node itself");
    }

    double p = (k >= 2) ? std::log(static_cast<double>(k)) / k : 0.0;
    int reps = static_cast<int>(std::ceil(2.0 * log2d(std::max(n, 2))));

    // per-node streams; value r of node v's stream drives repetition r
    std::vector<std::vector<char>> sampled(reps, std::vector<char>(n + 1, 0));
    for (NodeId v = 1; v <= n; ++v) {
        SplitRng rng(seed, "hitting_set", static_cast<std::uint64_t>(v));
        for (int r = 0; r < reps; ++r)
            if (rng.next_bernoulli(p)) sampled[r][v] = 1;
    }

    std::vector<char> best_in;  // smallest S over repetitions
    std::size_t best_size = static_cast<std::size_t>(n) + 1;
    for (int r = 0; r < reps; ++r) {
        std::vector<char> in_s = sampled[r];
        for (NodeId v = 1; v <= n; ++v) {
            bool hit = false;
            for (NodeId u : sets[v])
                if (in_s[u]) {
                    hit = true;
                    break;
                }
            if (!hit) in_s[v] = 1;  // deterministic fallback keeps S a hitting set
        }
        std::size_t sz = static_cast<std::size_t>(std::count(in_s.begin(), in_s.end(), 1));
        if (sz < best_size) {
            best_size = sz;
            best_in = in_s;
        }
    }

    std::vector<NodeId> s;
    for (NodeId v = 1; v <= n; ++v)
        if (best_in[v]) s.push_back(v);
    for (NodeId v = 1; v <= n; ++v) {
        bool hit = false;
        for (NodeId u : sets[v])
            if (best_in[u]) {
                hit = true;
                break;
            }
        if (!hit) throw PreconditionViolated("hitting_set: postcondition violated");
    }
    // all repetitions run in parallel; picking the winner is one exchange
    ledger.charge("hitting_set", 2);
    return s;
}

}  // namespace capsp
