#pragma once

#include <string>
#include <vector>

#include "capsp/estimate.hpp"
#include "capsp/graph.hpp"
#include "capsp/ledger.hpp"

namespace capsp {

struct PipelineConfig {
    std::string mode = "full";  // full | truncated | small_diameter | large_bw | logn | exact
    int t = 1;                  // truncated mode: reduction budget
    double eps = 0.1;
    int bandwidth_exp = -1;     // bandwidth = (log2 n)^exp words; <0 = mode default
    std::uint64_t seed = 1;
    double quota_c = 4.0;
    double c_k = 1.0;               // candidate-set precondition k <= c_k * n^(1/h)
    int materialize_threshold = 512;
    double spanner_budget_c = 64.0;
    double logn_alpha = 1.0;
    std::string sd_mode = "standard";  // standalone small_diameter flavor
};

// Bandwidth (in words) the configured mode runs at: (log2 n)^e, where e
// defaults to 3 for large_bw and 0 otherwise.
std::uint64_t bandwidth_for(const PipelineConfig& cfg, int n);

// ---- weight scaling ------------------------------------------------------

// Every edge weight becomes min(ceil(w / divisor), cap).
Graph scale_graph(const Graph& g, Weight divisor, Weight cap);

// Scales use divisors 2^0 .. 2^(levels-1); level_for picks the scale whose
// window [2^(i-1)*cap, 2^i*cap) contains the reference estimate (0 below cap).
struct ScalePlan {
    Weight cap = 0;
    int levels = 1;
    int level_for(Weight ref) const;
};
ScalePlan plan_scales(Weight delta_max, Weight cap);

// eta(u,v) = 2^i * scaled[i](u,v) at i = plan.level_for(reference(u,v));
// INF reference pairs stay INF. The scaled estimates must all claim the same
// factor l; the result claims l * (1 + eps). Selection is node-local.
ApspEstimate combine_scaled(const ApspEstimate& reference,
                            const std::vector<ApspEstimate>& scaled,
                            const ScalePlan& plan, double eps, RoundLedger& ledger);

// ---- stages --------------------------------------------------------------

// One reduction step: hopset from delta, exact candidate neighborhoods over
// the shortcut union, skeleton, spanner-backed quotient solve with
// b = max(1, ceil(sqrt a)), lift. Always returns the freshly lifted estimate;
// callers adopt it only when its claimed factor beats delta's.
ApspEstimate reduce_approximation(const Graph& g, const ApspEstimate& delta,
                                  const PipelineConfig& cfg, int step,
                                  RoundLedger& ledger);

struct SmallDiameterOpts {
    std::string mode = "standard";  // standard | log3 (quotient solved exactly)
    Weight diameter_bound = 0;      // 0 = 64 * (log2 n)^6; bootstrap acts as proxy
    Weight clique_cap = INF;        // input stands for g + implicit clique(cap)
};

// Constant-approximation APSP under a diameter bound: bootstrap, reductions
// while they improve, then hopset + exact candidate neighborhoods + skeleton.
// Claims 7 in log3 mode, 7 * (1+eps) * 3 in standard mode.
ApspEstimate small_diameter_apsp(const Graph& g, const PipelineConfig& cfg,
                                 RoundLedger& ledger, const SmallDiameterOpts& opts = {});

// Constant approximation at (log2 n)^3 bandwidth: bootstrap, hopset, scaled
// family solved by parallel small-diameter instances at (log2 n)^2 words,
// combined and lifted through a sqrt(n)-candidate skeleton.
// Claims 343 * (1+eps)^2.
ApspEstimate large_bw_apsp(const Graph& g, const PipelineConfig& cfg, RoundLedger& ledger);

// Single-word-bandwidth constant approximation. Zero weights are contracted
// away up front and the quotient skeleton is solved by the large-bandwidth
// stage on its own (smaller) node set. Claims 2401 * (1+eps).
ApspEstimate full_apsp(const Graph& g, const PipelineConfig& cfg, RoundLedger& ledger);

// Budgeted variant: bootstrap plus exactly t+1 reduction steps (adopted when
// improving), no final stage. At t >= ceil(logloglog n) + 2 it returns
// full_apsp unchanged.
ApspEstimate truncated_apsp(const Graph& g, const PipelineConfig& cfg, RoundLedger& ledger);

}  // namespace capsp
