#pragma once

#include <vector>

#include "capsp/ledger.hpp"
#include "capsp/types.hpp"

namespace capsp {

// Compute a set S hitting every candidate set (sets[v] for v = 1..n must
// contain v). Randomized rate ln(k)/k plus a deterministic self-add fallback,
// repeated ceil(2*log2 n) times in parallel keeping the smallest S. Always
// correct; only |S| is random. Returns S sorted ascending.
std::vector<NodeId> hitting_set(const std::vector<std::vector<NodeId>>& sets, int k,
                                std::uint64_t seed, RoundLedger& ledger);

}  // namespace capsp
