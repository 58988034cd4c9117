#include "capsp/report.hpp"

#include <chrono>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "capsp/oracle.hpp"
#include "capsp/rng.hpp"
#include "capsp/spanner.hpp"

namespace capsp {

PipelineReport run_pipeline(const Graph& g, const PipelineConfig& cfg, bool audit) {
    PipelineReport rep;
    rep.config = cfg;
    rep.n = g.n();
    rep.bandwidth_words = bandwidth_for(cfg, g.n());
    RoundLedger ledger(g.n(), rep.bandwidth_words, cfg.quota_c);

    auto t0 = std::chrono::steady_clock::now();
    if (cfg.mode == "full") {
        rep.estimate = full_apsp(g, cfg, ledger);
    } else if (cfg.mode == "truncated") {
        rep.estimate = truncated_apsp(g, cfg, ledger);
    } else if (cfg.mode == "small_diameter") {
        SmallDiameterOpts so;
        so.mode = cfg.sd_mode;
        rep.estimate = small_diameter_apsp(g, cfg, ledger, so);
    } else if (cfg.mode == "large_bw") {
        rep.estimate = large_bw_apsp(g, cfg, ledger);
    } else if (cfg.mode == "logn") {
        rep.estimate = logn_apsp(g, cfg.logn_alpha,
                                 SplitRng(cfg.seed, "bootstrap").next_u64(), ledger);
    } else if (cfg.mode == "exact") {
        broadcast(ledger, g.edge_count(), "graph_broadcast");
        rep.estimate = exact_apsp(g);
    } else {
        throw PreconditionViolated("run_pipeline: unknown mode " + cfg.mode);
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rep.rounds_total = ledger.total_rounds();
    rep.claimed_factor = rep.estimate.claimed_factor();
    rep.ledger = std::move(ledger);

    if (audit) {
        rep.audited = true;
        rep.max_ratio = 1.0;
        ApspEstimate oracle = exact_apsp(g);
        for (NodeId u = 1; u <= rep.n; ++u)
            for (NodeId v = 1; v <= rep.n; ++v) {
                if (u == v) continue;
                Weight d = oracle.at(u, v);
                Weight e = rep.estimate.at(u, v);
                if (d == INF || e == INF) {
                    if (d != e) ++rep.soundness_violations;
                    continue;
                }
                if (e < d) ++rep.soundness_violations;
                if (d > 0)
                    rep.max_ratio = std::max(
                        rep.max_ratio, static_cast<double>(e) / static_cast<double>(d));
                else if (e > 0)
                    rep.max_ratio = std::numeric_limits<double>::infinity();
            }
    }
    return rep;
}

std::uint64_t estimate_digest(const ApspEstimate& est) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xffULL;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(est.n()));
    for (NodeId u = 1; u <= est.n(); ++u)
        for (NodeId v = 1; v <= est.n(); ++v)
            mix(static_cast<std::uint64_t>(est.at(u, v)));
    return h;
}

nlohmann::json report_json(const PipelineReport& rep, bool include_timing) {
    const PipelineConfig& c = rep.config;
    nlohmann::json j;
    j["config"] = {{"mode", c.mode},
                   {"t", c.t},
                   {"eps", c.eps},
                   {"bandwidth_exp", c.bandwidth_exp},
                   {"seed", c.seed},
                   {"quota_c", c.quota_c},
                   {"c_k", c.c_k},
                   {"materialize_threshold", c.materialize_threshold},
                   {"spanner_budget_c", c.spanner_budget_c},
                   {"logn_alpha", c.logn_alpha},
                   {"sd_mode", c.sd_mode}};
    j["n"] = rep.n;
    j["bandwidth_words"] = rep.bandwidth_words;
    j["rounds_total"] = rep.rounds_total;
    j["claimed_factor"] = rep.claimed_factor;
    if (rep.audited) {
        j["max_ratio"] = rep.max_ratio;
        j["soundness_violations"] = rep.soundness_violations;
    }
    {
        std::ostringstream hex;
        hex << "0x" << std::hex << estimate_digest(rep.estimate);
        j["estimate_digest"] = hex.str();
    }
    j["ledger"] = rep.ledger.to_json();
    if (include_timing) j["wall_ms"] = rep.wall_ms;
    return j;
}

std::string report_csv_header() {
    return "n,mode,t,eps,seed,rounds_total,max_ratio,claimed_factor,wall_ms";
}

std::string report_csv_row(const PipelineReport& rep) {
    std::ostringstream out;
    out << rep.n << ',' << rep.config.mode << ',' << rep.config.t << ','
        << rep.config.eps << ',' << rep.config.seed << ',' << rep.rounds_total
        << ',';
    if (rep.audited)
        out << rep.max_ratio;
    else
        out << -1;
    out << ',' << rep.claimed_factor << ',' << rep.wall_ms;
    return out.str();
}

}  // namespace capsp
