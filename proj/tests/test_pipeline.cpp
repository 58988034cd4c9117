#include <doctest.h>

#include <cmath>

#include "capsp/oracle.hpp"
#include "capsp/pipeline.hpp"
#include "capsp/zero.hpp"

using namespace capsp;

namespace {

RoundLedger ledger_for(const PipelineConfig& cfg, int n) {
    return RoundLedger(n, bandwidth_for(cfg, n), cfg.quota_c);
}

// soundness + claimed-factor audit against exact distances
void audit(const Graph& g, const ApspEstimate& est, double tol = 1e-9) {
    ApspEstimate ref = exact_apsp(g);
    for (NodeId u = 1; u <= g.n(); ++u)
        for (NodeId v = 1; v <= g.n(); ++v) {
            Weight d = ref.at(u, v);
            Weight e = est.at(u, v);
            INFO("pair ", u, ",", v, " d=", d, " eta=", e);
            if (d == INF) {
                CHECK(e == INF);
                continue;
            }
            CHECK(e != INF);
            CHECK(e >= d);
            if (d > 0)
                CHECK(static_cast<double>(e) <=
                      est.claimed_factor() * static_cast<double>(d) + tol);
        }
}

}  // namespace

TEST_CASE("bandwidth defaults depend on the mode") {
    PipelineConfig cfg;
    cfg.mode = "full";
    CHECK(bandwidth_for(cfg, 256) == 1);
    cfg.mode = "large_bw";
    CHECK(bandwidth_for(cfg, 256) == 512);  // (log2 256)^3
    cfg.bandwidth_exp = 2;
    CHECK(bandwidth_for(cfg, 256) == 64);
    cfg.mode = "full";
    CHECK(bandwidth_for(cfg, 256) == 64);  // explicit exponent wins
}

TEST_CASE("scaling rounds weights up and caps them") {
    Graph g(5, false, INF);
    Weight w[] = {3, 1, 203, 7};
    for (int i = 0; i < 4; ++i) g.add_edge(i + 1, i + 2, w[i]);

    Graph s = scale_graph(g, 10, INF);
    ApspEstimate ds = exact_apsp(s);
    ApspEstimate d = exact_apsp(g);
    CHECK(d.at(1, 5) == 214);
    CHECK(ds.at(1, 5) == 24);  // ceil weights 1 + 1 + 21 + 1
    // scaled-back value overshoots by at most one unit per hop
    CHECK(10 * ds.at(1, 5) == 240);
    CHECK(10 * ds.at(1, 5) >= d.at(1, 5));
    CHECK(10 * ds.at(1, 5) <= d.at(1, 5) + 4 * 10);

    Graph capped = scale_graph(g, 10, 2);
    for (const Edge& e : capped.edges()) CHECK(e.w <= 2);
    CHECK_THROWS_AS(scale_graph(g, 0, 5), PreconditionViolated);
}

TEST_CASE("scale plan windows partition the reference range") {
    CHECK(plan_scales(99, 100).levels == 1);
    CHECK(plan_scales(100, 100).levels == 2);
    ScalePlan p = plan_scales(1600, 100);
    CHECK(p.levels == 6);
    CHECK(p.level_for(0) == 0);
    CHECK(p.level_for(99) == 0);
    CHECK(p.level_for(100) == 1);
    CHECK(p.level_for(199) == 1);
    CHECK(p.level_for(200) == 2);
    CHECK(p.level_for(1599) == 4);
    CHECK(p.level_for(1600) == 5);
    CHECK(p.level_for(1000000) == 5);  // clamped to the last level
    CHECK_THROWS_AS(p.level_for(INF), PreconditionViolated);
}

TEST_CASE("combining scaled estimates selects per pair and multiplies back") {
    ScalePlan plan = plan_scales(15, 10);
    REQUIRE(plan.levels == 2);

    ApspEstimate ref(3, 1.0);
    ref.set(1, 2, 5);
    ref.set(2, 1, 5);
    ref.set(1, 3, 15);
    ref.set(3, 1, 15);
    // (2,3) left INF
    std::vector<ApspEstimate> scaled(2, ApspEstimate(3, 2.0));
    scaled[0].set(1, 2, 7);
    scaled[1].set(1, 3, 9);

    RoundLedger ledger(3, 1);
    ApspEstimate eta = combine_scaled(ref, scaled, plan, 0.1, ledger);
    CHECK(eta.claimed_factor() == doctest::Approx(2.2));
    CHECK(eta.at(1, 2) == 7);        // level 0, multiplier 1
    CHECK(eta.at(1, 3) == 18);       // level 1, multiplier 2
    CHECK(eta.at(2, 3) == INF);
    CHECK(ledger.entries().back().label == "combine_select");

    std::vector<ApspEstimate> short_list(1, ApspEstimate(3, 2.0));
    CHECK_THROWS_AS(combine_scaled(ref, short_list, plan, 0.1, ledger),
                    PreconditionViolated);
    std::vector<ApspEstimate> mixed = scaled;
    mixed[1].set_claimed_factor(3.0);
    CHECK_THROWS_AS(combine_scaled(ref, mixed, plan, 0.1, ledger),
                    PreconditionViolated);
}

TEST_CASE("one reduction step lands on its claimed factor") {
    for (std::uint64_t seed : {1, 2, 3}) {
        Graph g = gen_graph(GenSpec::parse("erdos_renyi:48:0.15:w=1-50"), seed);
        ApspEstimate exact = exact_apsp(g);
        ApspEstimate rough(g.n(), 4.0);
        for (NodeId u = 1; u <= g.n(); ++u)
            for (NodeId v = 1; v <= g.n(); ++v) {
                Weight w = exact.at(u, v);
                rough.set(u, v, (u == v || w == INF) ? w : sat_mul(w, 4));
            }
        PipelineConfig cfg;
        cfg.seed = seed;
        RoundLedger ledger(g.n(), 8, cfg.quota_c);
        ApspEstimate out = reduce_approximation(g, rough, cfg, 0, ledger);
        // b = ceil(sqrt 4) = 2: 7 * 3 * 1.1
        CHECK(out.claimed_factor() == doctest::Approx(23.1));
        audit(g, out);
    }
}

TEST_CASE("small-diameter modes land on their claims") {
    Graph g = gen_graph(GenSpec::parse("erdos_renyi:32:0.2:w=1-30"), 5);
    PipelineConfig cfg;
    cfg.mode = "small_diameter";

    RoundLedger l1 = ledger_for(cfg, 32);
    ApspEstimate standard = small_diameter_apsp(g, cfg, l1);
    CHECK(standard.claimed_factor() == doctest::Approx(23.1));
    audit(g, standard);

    RoundLedger l2 = ledger_for(cfg, 32);
    SmallDiameterOpts log3;
    log3.mode = "log3";
    ApspEstimate exact3 = small_diameter_apsp(g, cfg, l2, log3);
    CHECK(exact3.claimed_factor() == doctest::Approx(7.0));
    audit(g, exact3);

    SmallDiameterOpts bad;
    bad.mode = "fancy";
    RoundLedger l3 = ledger_for(cfg, 32);
    CHECK_THROWS_AS(small_diameter_apsp(g, cfg, l3, bad), PreconditionViolated);
}

TEST_CASE("small-diameter guards its preconditions") {
    PipelineConfig cfg;

    // tiny instances bypass everything and answer exactly
    Graph tiny = gen_graph(GenSpec::parse("path:3:w=1-5"), 1);
    RoundLedger l0 = ledger_for(cfg, 3);
    ApspEstimate t = small_diameter_apsp(tiny, cfg, l0);
    CHECK(t.claimed_factor() == 1.0);
    audit(tiny, t);

    Graph zero(4, false, INF);
    zero.add_edge(1, 2, 0);
    zero.add_edge(2, 3, 1);
    zero.add_edge(3, 4, 1);
    RoundLedger l1 = ledger_for(cfg, 4);
    CHECK_THROWS_AS(small_diameter_apsp(zero, cfg, l1), PreconditionViolated);

    // weights far beyond the bound trip the bootstrap diameter proxy
    Graph wide(16, false, INF);
    for (NodeId u = 1; u < 16; ++u) wide.add_edge(u, u + 1, 100000);
    RoundLedger l2 = ledger_for(cfg, 16);
    CHECK_THROWS_AS(small_diameter_apsp(wide, cfg, l2), PreconditionViolated);

    // an explicit clique cap waives the proxy and clamps the result instead
    SmallDiameterOpts capped;
    capped.clique_cap = 50;
    RoundLedger l3 = ledger_for(cfg, 16);
    ApspEstimate est = small_diameter_apsp(wide, cfg, l3, capped);
    Weight lim = static_cast<Weight>(est.claimed_factor() * 50.0);
    for (NodeId u = 1; u <= 16; ++u)
        for (NodeId v = 1; v <= 16; ++v)
            if (u != v) {
                CHECK(est.at(u, v) <= lim);
                CHECK(est.at(u, v) >= 1);
            }
}

TEST_CASE("the large-bandwidth stage keeps its compound claim") {
    for (std::uint64_t seed : {2, 7}) {
        Graph g = gen_graph(GenSpec::parse("erdos_renyi:24:0.25:w=1-100"), seed);
        PipelineConfig cfg;
        cfg.mode = "large_bw";
        cfg.seed = seed;
        RoundLedger ledger = ledger_for(cfg, 24);
        ApspEstimate est = large_bw_apsp(g, cfg, ledger);
        CHECK(est.claimed_factor() == doctest::Approx(343.0 * 1.1 * 1.1));
        audit(g, est);
    }
    Graph zero(4, false, INF);
    zero.add_edge(1, 2, 0);
    zero.add_edge(3, 4, 2);
    PipelineConfig cfg;
    cfg.mode = "large_bw";
    RoundLedger l = ledger_for(cfg, 4);
    CHECK_THROWS_AS(large_bw_apsp(zero, cfg, l), PreconditionViolated);
}

TEST_CASE("the full pipeline claims 2401 (1+eps) and stays sound") {
    Graph g = gen_graph(GenSpec::parse("erdos_renyi:32:0.2:w=1-60"), 3);
    PipelineConfig cfg;
    RoundLedger ledger = ledger_for(cfg, 32);
    ApspEstimate est = full_apsp(g, cfg, ledger);
    CHECK(est.claimed_factor() == doctest::Approx(2401.0 * 1.1));
    audit(g, est);
    CHECK(ledger.total_rounds() > 0);
}

TEST_CASE("zero weights route through the compression wrapper transparently") {
    Graph g(16, false, INF);
    for (NodeId u = 1; u < 16; ++u) g.add_edge(u, u + 1, u % 4);  // zeros at u = 4, 8, 12
    REQUIRE(g.has_zero_weight_edge());
    PipelineConfig cfg;

    RoundLedger wrapped = ledger_for(cfg, 16);
    ApspEstimate eta = full_apsp(g, cfg, wrapped);

    // manual decomposition: compress, solve the positive quotient, lift
    RoundLedger manual = ledger_for(cfg, 16);
    ZeroCompression zc = compress_zero(g, manual);
    REQUIRE_FALSE(zc.quotient.has_zero_weight_edge());
    ApspEstimate inner = full_apsp(zc.quotient, cfg, manual);
    ApspEstimate lifted = lift_compressed(inner, zc, manual);

    for (NodeId u = 1; u <= 16; ++u)
        for (NodeId v = 1; v <= 16; ++v) CHECK(eta.at(u, v) == lifted.at(u, v));
    CHECK(wrapped.total_rounds() == manual.total_rounds());
    audit(g, eta);
}

TEST_CASE("the truncated mode improves monotonically and saturates into full") {
    Graph g = gen_graph(GenSpec::parse("erdos_renyi:64:0.1:w=1-40"), 6);
    PipelineConfig cfg;
    cfg.mode = "truncated";

    double prev = 1e18;
    for (int t = 0; t <= 2; ++t) {
        cfg.t = t;
        RoundLedger ledger = ledger_for(cfg, 64);
        ApspEstimate est = truncated_apsp(g, cfg, ledger);
        CHECK(est.claimed_factor() <= prev + 1e-9);
        prev = est.claimed_factor();
        audit(g, est);
    }

    // at n = 16 the budget saturates at t = 3 and delegates to the full mode
    Graph small = gen_graph(GenSpec::parse("erdos_renyi:16:0.3:w=1-20"), 2);
    cfg.t = 3;
    RoundLedger lt = ledger_for(cfg, 16);
    ApspEstimate sat = truncated_apsp(small, cfg, lt);
    PipelineConfig fcfg = cfg;
    fcfg.mode = "full";
    RoundLedger lf = ledger_for(fcfg, 16);
    ApspEstimate full = full_apsp(small, fcfg, lf);
    CHECK(sat.claimed_factor() == full.claimed_factor());
    for (NodeId u = 1; u <= 16; ++u)
        for (NodeId v = 1; v <= 16; ++v) CHECK(sat.at(u, v) == full.at(u, v));

    cfg.t = -1;
    RoundLedger lneg = ledger_for(cfg, 16);
    CHECK_THROWS_AS(truncated_apsp(small, cfg, lneg), PreconditionViolated);
}

TEST_CASE("identical configurations reproduce identical runs") {
    Graph g = gen_graph(GenSpec::parse("random_geometric:48:0.35:w=1-50"), 9);
    PipelineConfig cfg;
    cfg.seed = 42;
    RoundLedger l1 = ledger_for(cfg, 48), l2 = ledger_for(cfg, 48);
    ApspEstimate a = full_apsp(g, cfg, l1);
    ApspEstimate b = full_apsp(g, cfg, l2);
    CHECK(a.claimed_factor() == b.claimed_factor());
    for (NodeId u = 1; u <= 48; ++u)
        for (NodeId v = 1; v <= 48; ++v) CHECK(a.at(u, v) == b.at(u, v));
    CHECK(l1.total_rounds() == l2.total_rounds());
    REQUIRE(l1.entries().size() == l2.entries().size());
    for (std::size_t i = 0; i < l1.entries().size(); ++i)
        CHECK(l1.entries()[i].label == l2.entries()[i].label);
}
