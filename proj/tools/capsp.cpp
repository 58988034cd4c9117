// Command-line harness: generate or load a graph, run the configured
// pipeline, and emit JSON/CSV reports; `audit` drives the invariant suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "capsp/hopset.hpp"
#include "capsp/knearest.hpp"
#include "capsp/oracle.hpp"
#include "capsp/report.hpp"
#include "capsp/rng.hpp"
#include "capsp/skeleton.hpp"
#include "capsp/spanner.hpp"

namespace {

using namespace capsp;

std::uint64_t default_seed() {
    if (const char* env = std::getenv("CLIQUE_APSP_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring unparsable CLIQUE_APSP_SEED\n";
        }
    }
    return 1;
}

Graph load_graph(const std::string& gen, const std::string& input,
                 std::uint64_t seed) {
    if (!gen.empty() && !input.empty())
        throw PreconditionViolated("pass either --gen or --input, not both");
    if (!gen.empty()) return gen_graph(GenSpec::parse(gen), seed);
    if (!input.empty()) return parse_edge_list_file(input);
    throw PreconditionViolated("one of --gen or --input is required");
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int run_command(const std::string& gen, const std::string& input,
                PipelineConfig cfg, int reps, bool audit, const std::string& out,
                bool append, bool no_timing) {
    std::vector<PipelineReport> reports;
    std::uint64_t violations = 0;
    for (int r = 0; r < reps; ++r) {
        std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(r);
        PipelineConfig run_cfg = cfg;
        run_cfg.seed = seed;
        Graph g = load_graph(gen, input, seed);
        PipelineReport rep = run_pipeline(g, run_cfg, audit);
        violations += rep.soundness_violations;
        reports.push_back(std::move(rep));
    }

    if (ends_with(out, ".csv")) {
        std::ofstream f(out, append ? std::ios::app : std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + out);
        if (!append) f << report_csv_header() << '\n';
        for (const PipelineReport& rep : reports) f << report_csv_row(rep) << '\n';
    } else {
        nlohmann::json body;
        if (reports.size() == 1) {
            body = report_json(reports.front(), !no_timing);
        } else {
            body = nlohmann::json::array();
            for (const PipelineReport& rep : reports)
                body.push_back(report_json(rep, !no_timing));
        }
        if (out.empty()) {
            std::cout << body.dump(2) << '\n';
        } else {
            std::ofstream f(out);
            if (!f) throw std::runtime_error("cannot open " + out);
            f << body.dump(2) << '\n';
        }
    }

    if (violations > 0) {
        std::cerr << violations << " soundness violation(s)\n";
        return 1;
    }
    return 0;
}

// ---- invariant suites ----------------------------------------------------

TropicalMatrix random_matrix(int n, double density, Weight wmax,
                             std::uint64_t seed) {
    TropicalMatrix m(n);
    SplitRng rng(seed, "audit_matrix");
    for (NodeId u = 1; u <= n; ++u) {
        std::vector<std::pair<NodeId, Weight>> row;
        row.push_back({u, 0});
        for (NodeId v = 1; v <= n; ++v)
            if (v != u && rng.next_double() < density)
                row.push_back({v, static_cast<Weight>(rng.next_in(1, wmax))});
        m.set_row(u, std::move(row));
    }
    return m;
}

bool suite_filter(int n, int pmax, std::uint64_t seed) {
    int checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
        TropicalMatrix a = random_matrix(n, 0.25, 50, seed + trial);
        for (int k : {2, 4, 6}) {
            for (int i = 1; i <= pmax; ++i) {
                TropicalMatrix lhs_base =
                    minplus_power(filter_rows(a, k).base, i);
                FilteredMatrix lhs = filter_rows(lhs_base, k);
                FilteredMatrix rhs = filter_rows(minplus_power(a, i), k);
                for (NodeId u = 1; u <= n; ++u)
                    if (lhs.base.row(u) != rhs.base.row(u)) {
                        std::cerr << "filter suite: mismatch at row " << u
                                  << " (k=" << k << ", i=" << i << ")\n";
                        return false;
                    }
                ++checked;
            }
        }
    }
    std::cout << "filter suite: " << checked << " power/filter pairs agree\n";
    return true;
}

bool suite_hopset(int n, std::uint64_t seed, bool inject_fault) {
    GenSpec spec = GenSpec::parse("erdos_renyi:" + std::to_string(n) +
                                  ":0.15:w=1-60");
    Graph g = gen_graph(spec, seed);
    RoundLedger ledger(g.n(), 1, 4.0);
    ApspEstimate delta = exact_apsp(g);
    Hopset hs = build_hopset(g, delta, 1.0, ledger);
    if (inject_fault && !hs.shortcuts.empty()) {
        // shave a tight shortcut below the true distance so the verifier must
        // report the pair
        std::size_t victim = 0;
        for (std::size_t i = 0; i < hs.shortcuts.size(); ++i)
            if (hs.shortcuts[i].w == delta.at(hs.shortcuts[i].u, hs.shortcuts[i].v)) {
                victim = i;
                break;
            }
        hs.shortcuts[victim].w = std::max<Weight>(0, hs.shortcuts[victim].w - 1);
    }
    HopsetVerifyResult res = verify_hopset(g, hs, hs.k, hs.beta);
    if (!res.ok) {
        std::cerr << "hopset suite: failed at pair (" << res.u << ", " << res.v
                  << "): " << res.reason << '\n';
        return false;
    }
    std::cout << "hopset suite: " << hs.shortcuts.size()
              << " shortcuts verified (beta=" << hs.beta << ")\n";
    return true;
}

bool suite_skeleton(int n, std::uint64_t seed) {
    GenSpec spec = GenSpec::parse("erdos_renyi:" + std::to_string(n) +
                                  ":0.2:w=1-40");
    Graph g = gen_graph(spec, seed);
    RoundLedger ledger(g.n(), 1, 4.0);
    ApspEstimate delta = exact_apsp(g);
    int k = std::max(2, static_cast<int>(std::sqrt(n)));
    KNearestResult kn = approx_knearest_sets(delta, k);
    std::vector<std::vector<NodeId>> cand(n + 1);
    PartialEstimate dp(n, 1.0);
    for (NodeId u = 1; u <= n; ++u)
        for (const auto& [v, w] : kn.nearest[u]) {
            if (w == INF) continue;
            cand[u].push_back(v);
            dp.set(u, v, w);
        }
    SkeletonGraph sk = build_skeleton(g, dp, cand, k, seed, ledger);
    ApspEstimate gs = exact_apsp(sk.quotient);
    broadcast(ledger, sk.quotient.edge_count(), "quotient_broadcast");
    ApspEstimate eta = lift_skeleton_apsp(sk, gs, dp, cand, ledger);
    double worst = 0.0;
    for (NodeId u = 1; u <= n; ++u)
        for (NodeId v = 1; v <= n; ++v) {
            if (u == v) continue;
            Weight d = delta.at(u, v), e = eta.at(u, v);
            if (d == INF) continue;
            if (e < d) {
                std::cerr << "skeleton suite: unsound pair (" << u << ", " << v
                          << ")\n";
                return false;
            }
            if (e != INF)
                worst = std::max(worst,
                                 static_cast<double>(e) / static_cast<double>(d));
        }
    if (worst > 7.0) {
        std::cerr << "skeleton suite: lift ratio " << worst << " exceeds 7\n";
        return false;
    }
    std::cout << "skeleton suite: max lift ratio " << worst << " <= 7\n";
    return true;
}

bool suite_scaling(int n, std::uint64_t seed) {
    GenSpec spec = GenSpec::parse("erdos_renyi:" + std::to_string(n) +
                                  ":0.2:w=1-200");
    Graph g = gen_graph(spec, seed);
    RoundLedger ledger(g.n(), 1, 4.0);
    ApspEstimate exact = exact_apsp(g);
    const double eps = 0.5;
    const int h = 4;
    Weight cap = static_cast<Weight>(std::ceil(2.0 / eps)) * h *
                 std::max<Weight>(h, 2);
    ScalePlan plan = plan_scales(exact.max_finite(), cap);
    std::vector<ApspEstimate> scaled;
    for (int i = 0; i < plan.levels; ++i)
        scaled.push_back(
            exact_apsp(scale_graph(g, static_cast<Weight>(1) << i, cap)));
    ApspEstimate eta = combine_scaled(exact, scaled, plan, eps, ledger);
    TropicalMatrix hh = hhop_distances(g, h);
    for (NodeId u = 1; u <= n; ++u) {
        std::vector<Weight> hrow(n + 1, INF);
        for (const auto& [v, w] : hh.row(u)) hrow[v] = w;
        for (NodeId v = 1; v <= n; ++v) {
            if (u == v) continue;
            Weight d = exact.at(u, v), e = eta.at(u, v);
            if (d == INF) continue;
            if (e < d) {
                std::cerr << "scaling suite: unsound pair (" << u << ", " << v
                          << ")\n";
                return false;
            }
            if (hrow[v] == d &&
                static_cast<double>(e) >= (1.0 + eps) * static_cast<double>(d)) {
                std::cerr << "scaling suite: pair (" << u << ", " << v
                          << ") misses the (1+eps) bound\n";
                return false;
            }
        }
    }
    std::cout << "scaling suite: both bounds hold over " << plan.levels
              << " levels\n";
    return true;
}

int audit_command(const std::string& suite, int n, int pmax, std::uint64_t seed,
                  bool inject_fault) {
    bool ok = true;
    if (suite == "all" || suite == "filter") ok = suite_filter(std::min(n, 32), pmax, seed) && ok;
    if (suite == "all" || suite == "hopset") ok = suite_hopset(n, seed, inject_fault) && ok;
    if (suite == "all" || suite == "skeleton") ok = suite_skeleton(n, seed) && ok;
    if (suite == "all" || suite == "scaling") ok = suite_scaling(std::min(n, 48), seed) && ok;
    std::cout << (ok ? "audit: all requested suites pass\n"
                     : "audit: FAILURES detected\n");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"congested-clique APSP benchmark harness"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run one pipeline configuration");
    std::string gen, input, out;
    PipelineConfig cfg;
    cfg.seed = default_seed();
    int reps = 1;
    bool audit = false, append = false, no_timing = false;
    run->add_option("--gen", gen, "generator spec, e.g. erdos_renyi:64:0.2:w=1-100");
    run->add_option("--input", input, "edge-list file");
    run->add_option("--mode", cfg.mode,
                    "full | truncated | small_diameter | large_bw | logn | exact");
    run->add_option("--t", cfg.t, "truncated-mode reduction budget");
    run->add_option("--eps", cfg.eps, "target approximation slack");
    run->add_option("--seed", cfg.seed, "base seed (default: CLIQUE_APSP_SEED or 1)");
    run->add_option("--reps", reps, "repetitions with seeds seed..seed+reps-1");
    run->add_option("--bandwidth-exp", cfg.bandwidth_exp,
                    "bandwidth (log2 n)^e words; -1 = mode default");
    run->add_option("--sd-mode", cfg.sd_mode, "small_diameter flavor: standard | log3");
    run->add_flag("--audit", audit, "compare against the exact oracle");
    run->add_option("--out", out, "output path; *.csv selects CSV format");
    run->add_flag("--append", append, "append CSV rows without a header");
    run->add_flag("--no-timing", no_timing, "omit wall_ms from JSON for bit-stable output");

    auto* aud = app.add_subcommand("audit", "run invariant suites");
    std::string suite = "all";
    int audit_n = 32, audit_i = 4;
    std::uint64_t audit_seed = default_seed();
    bool inject_fault = false;
    aud->add_option("--suite", suite, "all | filter | hopset | skeleton | scaling");
    aud->add_option("--n", audit_n, "instance size");
    aud->add_option("--i", audit_i, "max power for the filter suite");
    aud->add_option("--seed", audit_seed, "suite seed");
    aud->add_flag("--inject-fault", inject_fault,
                  "underweight one hopset shortcut (hopset suite must fail)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return run_command(gen, input, cfg, reps, audit, out, append, no_timing);
        return audit_command(suite, audit_n, audit_i, audit_seed, inject_fault);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
