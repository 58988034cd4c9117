#include "capsp/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string_view>
#include <utility>

#include "capsp/hopset.hpp"
#include "capsp/knearest.hpp"
#include "capsp/oracle.hpp"
#include "capsp/rng.hpp"
#include "capsp/skeleton.hpp"
#include "capsp/spanner.hpp"
#include "capsp/zero.hpp"

namespace capsp {

namespace {

std::uint64_t stage_seed(const PipelineConfig& cfg, std::string_view tag,
                         std::uint64_t idx = 0) {
    return SplitRng(cfg.seed, tag, idx).next_u64();
}

std::uint64_t pow_log_words(int n, int e) {
    double w = std::pow(log2d(std::max(n, 2)), static_cast<double>(e));
    return w < 1.0 ? 1 : static_cast<std::uint64_t>(w);
}

// Smallest it >= 1 with base^it >= x.
int ceil_log(int base, long long x) {
    if (base < 2) throw PreconditionViolated("ceil_log: base must be >= 2");
    int it = 0;
    long long p = 1;
    while (p < x) {
        p *= base;
        ++it;
    }
    return std::max(it, 1);
}

// Degenerate instances are answered exactly after shipping the whole graph.
ApspEstimate exact_fallback(const Graph& g, RoundLedger& ledger) {
    broadcast(ledger, g.edge_count(), "graph_broadcast");
    return exact_apsp(g);
}

ApspEstimate solve_quotient_exact(const Graph& q, RoundLedger& ledger) {
    broadcast(ledger, q.edge_count(), "quotient_broadcast");
    return exact_apsp(q);
}

// Cap every off-diagonal entry at floor(claimed * cap): the value any pair
// can reach through the implicit clique edge of weight cap, so both the
// soundness and the factor of the estimate survive the clamp.
void clamp_estimate(ApspEstimate& est, Weight cap) {
    if (cap == INF) return;
    double lim_d = est.claimed_factor() * static_cast<double>(cap);
    Weight lim = lim_d >= static_cast<double>(INF) ? INF
                                                   : static_cast<Weight>(lim_d);
    if (lim < cap) lim = cap;
    for (NodeId u = 1; u <= est.n(); ++u)
        for (NodeId v = 1; v <= est.n(); ++v)
            if (u != v && est.at(u, v) > lim) est.set(u, v, lim);
}

struct Candidates {
    std::vector<std::vector<NodeId>> sets;
    PartialEstimate delta;
};

// Exact candidate neighborhoods read off a filtered matrix (claims factor 1).
Candidates candidate_sets(const FilteredMatrix& fm) {
    int n = fm.base.n();
    Candidates c{std::vector<std::vector<NodeId>>(n + 1), PartialEstimate(n, 1.0)};
    for (NodeId u = 1; u <= n; ++u) {
        bool self = false;
        for (const auto& [v, w] : fm.base.row(u)) {
            c.sets[u].push_back(v);
            c.delta.set(u, v, w);
            if (v == u) self = true;
        }
        if (!self) {
            c.sets[u].push_back(u);
            std::sort(c.sets[u].begin(), c.sets[u].end());
        }
    }
    return c;
}

// Approximate candidate neighborhoods from a full estimate; unreachable
// entries are dropped so downstream loads carry information only.
Candidates candidate_sets(const ApspEstimate& est, int k) {
    int n = est.n();
    KNearestResult kn = approx_knearest_sets(est, k);
    Candidates c{std::vector<std::vector<NodeId>>(n + 1),
                 PartialEstimate(n, est.claimed_factor())};
    for (NodeId u = 1; u <= n; ++u) {
        bool self = false;
        for (const auto& [v, w] : kn.nearest[u]) {
            if (w == INF) continue;
            c.sets[u].push_back(v);
            c.delta.set(u, v, w);
            if (v == u) self = true;
        }
        if (!self) c.sets[u].push_back(u);
        std::sort(c.sets[u].begin(), c.sets[u].end());
    }
    return c;
}

// Claimed factor of one reduction step applied at factor a: 7 times the
// quotient spanner stretch at b = ceil(sqrt a).
double reduced_claim(double a, double eps) {
    int b = std::max(1, static_cast<int>(std::ceil(std::sqrt(a) - 1e-9)));
    double stretch = b == 1 ? 1.0 : (2.0 * b - 1.0) * (1.0 + eps);
    return 7.0 * stretch;
}

ApspEstimate truncated_core(const Graph& g, const PipelineConfig& cfg,
                            RoundLedger& ledger);

}  // namespace

std::uint64_t bandwidth_for(const PipelineConfig& cfg, int n) {
    int e = cfg.bandwidth_exp;
    if (e < 0) e = cfg.mode == "large_bw" ? 3 : 0;
    return pow_log_words(n, e);
}

Graph scale_graph(const Graph& g, Weight divisor, Weight cap) {
    if (divisor < 1 || cap < 1)
        throw PreconditionViolated("scale_graph: divisor and cap must be positive");
    Graph out(g.n(), g.directed(), INF);
    for (const Edge& e : g.edges()) {
        Weight w = e.w / divisor + (e.w % divisor != 0 ? 1 : 0);
        out.add_edge(e.u, e.v, std::min(w, cap));
    }
    return out;
}

int ScalePlan::level_for(Weight ref) const {
    if (ref == INF)
        throw PreconditionViolated("scale plan: no level for an unreachable pair");
    if (cap < 1) throw PreconditionViolated("scale plan: cap must be positive");
    if (ref < cap) return 0;
    int i = std::bit_width(static_cast<std::uint64_t>(ref / cap));
    return std::min(i, levels - 1);
}

ScalePlan plan_scales(Weight delta_max, Weight cap) {
    if (cap < 1) throw PreconditionViolated("plan_scales: cap must be positive");
    if (delta_max == INF)
        throw PreconditionViolated("plan_scales: reference maximum must be finite");
    ScalePlan p;
    p.cap = cap;
    p.levels = 1;
    if (delta_max >= cap)
        p.levels = 1 + std::bit_width(static_cast<std::uint64_t>(delta_max / cap));
    return p;
}

ApspEstimate combine_scaled(const ApspEstimate& reference,
                            const std::vector<ApspEstimate>& scaled,
                            const ScalePlan& plan, double eps, RoundLedger& ledger) {
    const int n = reference.n();
    if (static_cast<int>(scaled.size()) != plan.levels)
        throw PreconditionViolated("combine: estimate count does not match the plan");
    if (scaled.empty()) throw PreconditionViolated("combine: no scaled estimates");
    const double l = scaled.front().claimed_factor();
    for (const ApspEstimate& s : scaled) {
        if (s.n() != n)
            throw PreconditionViolated("combine: scaled estimate size mismatch");
        if (std::fabs(s.claimed_factor() - l) > 1e-9)
            throw PreconditionViolated("combine: scaled estimates claim mixed factors");
    }

    ApspEstimate eta(n, l * (1.0 + eps));
    for (NodeId u = 1; u <= n; ++u)
        for (NodeId v = 1; v <= n; ++v) {
            if (u == v) continue;
            Weight ref = reference.at(u, v);
            if (ref == INF) continue;
            int i = plan.level_for(ref);
            eta.set(u, v,
                    sat_mul(static_cast<Weight>(1) << i, scaled[i].at(u, v)));
        }
    // Each node already stores its row of the reference and of every scaled
    // estimate, so selection is local.
    ledger.charge("combine_select", 0);
    return eta;
}

ApspEstimate reduce_approximation(const Graph& g, const ApspEstimate& delta,
                                  const PipelineConfig& cfg, int step,
                                  RoundLedger& ledger) {
    const int n = g.n();
    const double a = std::max(1.0, delta.claimed_factor());

    Hopset hs = build_hopset(g, delta, a, ledger);

    int h = std::max(2, static_cast<int>(std::floor(std::pow(a, 0.25) / 2.0 + 1e-12)));
    int k = static_cast<int>(std::floor(std::pow(n, 1.0 / h) + 1e-12));
    double k_alt = std::ceil(std::pow(n, 2.0 * std::pow(a, -0.25)));
    if (k_alt < static_cast<double>(k)) k = static_cast<int>(k_alt);
    k = std::clamp(k, 1, n);
    int iters = ceil_log(h, std::max(hs.beta, 2));

    FilteredMatrix abar = filtered_union_adjacency(g, hs.shortcuts, k);
    KnearestOpts kop{cfg.c_k, cfg.materialize_threshold};
    FilteredMatrix kn = knearest_iter(abar.base, h, k, iters, ledger, kop);
    Candidates cs = candidate_sets(kn);

    SkeletonGraph sk = build_skeleton(g, cs.delta, cs.sets, k,
                                      stage_seed(cfg, "reduce_skeleton", step),
                                      ledger);
    int b = std::max(1, static_cast<int>(std::ceil(std::sqrt(a) - 1e-9)));
    ApspEstimate gs = spanner_apsp(sk.quotient, b, cfg.eps,
                                   stage_seed(cfg, "reduce_spanner", step), ledger,
                                   cfg.spanner_budget_c);
    return lift_skeleton_apsp(sk, gs, cs.delta, cs.sets, ledger);
}

ApspEstimate small_diameter_apsp(const Graph& g, const PipelineConfig& cfg,
                                 RoundLedger& ledger, const SmallDiameterOpts& opts) {
    const int n = g.n();
    if (n < 4) return exact_fallback(g, ledger);
    if (g.has_zero_weight_edge())
        throw PreconditionViolated(
            "small_diameter: zero weights must be compressed away first");
    if (opts.mode != "standard" && opts.mode != "log3")
        throw PreconditionViolated("small_diameter: unknown mode " + opts.mode);

    ApspEstimate delta =
        logn_apsp(g, cfg.logn_alpha, stage_seed(cfg, "sd_bootstrap"), ledger);
    clamp_estimate(delta, opts.clique_cap);

    if (opts.clique_cap == INF) {
        Weight bound = opts.diameter_bound;
        if (bound == 0) {
            double b = 64.0 * std::pow(log2d(n), 6.0);
            bound = b >= static_cast<double>(INF) ? INF : static_cast<Weight>(b);
        }
        // The bootstrap estimate over-reports by at most its claimed factor,
        // so it serves as the diameter proxy.
        Weight proxy = delta.max_finite();
        if (proxy > sat_mul(bound, static_cast<Weight>(
                                       std::ceil(delta.claimed_factor()))))
            throw PreconditionViolated(
                "small_diameter: bootstrap proxy " + std::to_string(proxy) +
                " exceeds the diameter bound " + std::to_string(bound));
    }

    int step = 0;
    while (step < 64) {
        double a = delta.claimed_factor();
        if (reduced_claim(a, cfg.eps) >= a) break;
        ApspEstimate next = reduce_approximation(g, delta, cfg, step++, ledger);
        clamp_estimate(next, opts.clique_cap);
        if (next.claimed_factor() < delta.claimed_factor()) delta = std::move(next);
    }

    // Final stage: hopset at the current factor, exact sqrt(n)-neighborhoods
    // over the shortcut union, skeleton on top.
    double a = std::max(1.0, delta.claimed_factor());
    Hopset hs = build_hopset(g, delta, a, ledger);
    int k = std::max(2, static_cast<int>(std::floor(std::sqrt(n) + 1e-12)));
    int iters = ceil_log(2, std::max(hs.beta, 2));
    FilteredMatrix abar = filtered_union_adjacency(g, hs.shortcuts, k);
    KnearestOpts kop{cfg.c_k, cfg.materialize_threshold};
    FilteredMatrix kn = knearest_iter(abar.base, 2, k, iters, ledger, kop);
    Candidates cs = candidate_sets(kn);

    SkeletonGraph sk = build_skeleton(g, cs.delta, cs.sets, k,
                                      stage_seed(cfg, "sd_skeleton"), ledger);
    ApspEstimate gs =
        opts.mode == "log3"
            ? solve_quotient_exact(sk.quotient, ledger)
            : spanner_apsp(sk.quotient, 2, cfg.eps, stage_seed(cfg, "sd_spanner"),
                           ledger, cfg.spanner_budget_c);
    ApspEstimate eta = lift_skeleton_apsp(sk, gs, cs.delta, cs.sets, ledger);
    clamp_estimate(eta, opts.clique_cap);
    return eta;
}

ApspEstimate large_bw_apsp(const Graph& g, const PipelineConfig& cfg,
                           RoundLedger& ledger) {
    const int n = g.n();
    if (n < 4) return exact_fallback(g, ledger);
    if (g.has_zero_weight_edge())
        throw PreconditionViolated(
            "large_bw: zero weights must be compressed away first");
    if (cfg.eps <= 0.0) throw PreconditionViolated("large_bw: eps must be positive");

    ApspEstimate ref =
        logn_apsp(g, cfg.logn_alpha, stage_seed(cfg, "lbw_bootstrap"), ledger);
    const double s = std::max(1.0, ref.claimed_factor());

    Hopset hs = build_hopset(g, ref, s, ledger);
    Graph gh = augment_undirected(g, hs.shortcuts);

    // cap >= 4*s*beta/eps makes the rounding loss on a beta-hop path an
    // eps-fraction of any distance the selected scale window admits.
    Weight b_eps = static_cast<Weight>(std::ceil(2.0 / cfg.eps - 1e-12));
    Weight beta = std::max<Weight>(hs.beta, 1);
    Weight two_s = 2 * static_cast<Weight>(std::ceil(s - 1e-9));
    Weight cap = sat_mul(b_eps, sat_mul(beta, std::max(beta, two_s)));
    ScalePlan plan = plan_scales(ref.max_finite(), cap);

    // Scaled instances run in parallel at (log2 n)^2 words each; the family
    // is materialized one level at a time.
    std::vector<ApspEstimate> scaled;
    std::vector<RoundLedger> subs;
    scaled.reserve(plan.levels);
    subs.reserve(plan.levels);
    const std::uint64_t inst_bw = pow_log_words(n, 2);
    for (int i = 0; i < plan.levels; ++i) {
        Graph gi = scale_graph(gh, static_cast<Weight>(1) << i, cap);
        RoundLedger sub(n, inst_bw, cfg.quota_c);
        PipelineConfig icfg = cfg;
        icfg.seed = stage_seed(cfg, "lbw_scale", i);
        SmallDiameterOpts so;
        so.mode = "log3";
        so.clique_cap = cap;
        scaled.push_back(small_diameter_apsp(gi, icfg, sub, so));
        subs.push_back(std::move(sub));
    }
    charge_parallel(ledger, "scaled_instances", subs);

    ApspEstimate eta = combine_scaled(ref, scaled, plan, cfg.eps, ledger);

    // sqrt(n)-candidate skeleton over the combined estimate; the quotient is
    // small enough to broadcast outright at this bandwidth.
    int k = std::clamp(static_cast<int>(std::ceil(std::sqrt(n) - 1e-12)), 1, n);
    Candidates cs = candidate_sets(eta, k);
    SkeletonGraph sk = build_skeleton(g, cs.delta, cs.sets, k,
                                      stage_seed(cfg, "lbw_skeleton"), ledger);
    ApspEstimate gs = solve_quotient_exact(sk.quotient, ledger);
    return lift_skeleton_apsp(sk, gs, cs.delta, cs.sets, ledger);
}

namespace {

ApspEstimate full_core(const Graph& g, const PipelineConfig& cfg,
                       RoundLedger& ledger) {
    const int n = g.n();
    if (n < 4) return exact_fallback(g, ledger);

    // The two nested stage factors multiply to (1 + eps) overall.
    const double eps_inner = std::sqrt(1.0 + cfg.eps) - 1.0;

    const double big_l = log2d(n);
    const double log_log = std::max(1.0, std::log2(std::max(big_l, 2.0)));
    int h = std::max(2, static_cast<int>(std::floor(big_l / log_log + 1e-12)));
    int k = static_cast<int>(std::floor(std::pow(n, 1.0 / h) + 1e-12));
    double k_alt = std::ceil(std::pow(big_l, 4.0));
    if (k_alt < static_cast<double>(k)) k = static_cast<int>(k_alt);
    k = std::clamp(k, 2, n);
    int iters = ceil_log(h, k);

    KnearestOpts kop{cfg.c_k, cfg.materialize_threshold};
    FilteredMatrix kn = knearest_iter(adjacency_matrix(g), h, k, iters, ledger, kop);
    Candidates cs = candidate_sets(kn);

    SkeletonGraph sk = build_skeleton(g, cs.delta, cs.sets, k,
                                      stage_seed(cfg, "full_skeleton"), ledger);
    const int ns = static_cast<int>(sk.nodes.size());

    ApspEstimate gs;
    if (ns < 4) {
        gs = solve_quotient_exact(sk.quotient, ledger);
    } else {
        // The quotient instance runs at its own (log2 ns)^3-word bandwidth;
        // its rounds land in the parent ledger one for one.
        PipelineConfig sub_cfg = cfg;
        sub_cfg.mode = "large_bw";
        sub_cfg.eps = eps_inner;
        sub_cfg.bandwidth_exp = 3;
        sub_cfg.seed = stage_seed(cfg, "quotient_large_bw");
        RoundLedger sub(ns, pow_log_words(ns, 3), cfg.quota_c);
        gs = large_bw_apsp(sk.quotient, sub_cfg, sub);
        LedgerEntry e;
        e.label = "quotient_large_bw";
        e.rounds = sub.total_rounds();
        ledger.append(std::move(e));
    }
    return lift_skeleton_apsp(sk, gs, cs.delta, cs.sets, ledger);
}

ApspEstimate truncated_core(const Graph& g, const PipelineConfig& cfg,
                            RoundLedger& ledger) {
    const int n = g.n();
    if (n < 4) return exact_fallback(g, ledger);

    ApspEstimate delta =
        logn_apsp(g, cfg.logn_alpha, stage_seed(cfg, "bootstrap"), ledger);
    for (int step = 0; step <= cfg.t; ++step) {
        ApspEstimate next = reduce_approximation(g, delta, cfg, step, ledger);
        if (next.claimed_factor() < delta.claimed_factor()) delta = std::move(next);
    }
    return delta;
}

template <typename Solve>
ApspEstimate with_zero_wrap(const Graph& g, RoundLedger& ledger, Solve solve) {
    if (!g.has_zero_weight_edge()) return solve(g);
    ZeroCompression zc = compress_zero(g, ledger);
    ApspEstimate inner = solve(zc.quotient);
    return lift_compressed(inner, zc, ledger);
}

}  // namespace

ApspEstimate full_apsp(const Graph& g, const PipelineConfig& cfg,
                       RoundLedger& ledger) {
    return with_zero_wrap(g, ledger, [&](const Graph& q) {
        return full_core(q, cfg, ledger);
    });
}

ApspEstimate truncated_apsp(const Graph& g, const PipelineConfig& cfg,
                            RoundLedger& ledger) {
    if (cfg.t < 0) throw PreconditionViolated("truncated: t must be non-negative");
    int saturation = ceil_logloglog2(g.n()) + 2;
    if (cfg.t >= saturation) return full_apsp(g, cfg, ledger);
    return with_zero_wrap(g, ledger, [&](const Graph& q) {
        return truncated_core(q, cfg, ledger);
    });
}

}  // namespace capsp
