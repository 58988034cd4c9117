#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "capsp/estimate.hpp"
#include "capsp/graph.hpp"
#include "capsp/ledger.hpp"
#include "capsp/pipeline.hpp"

namespace capsp {

// One pipeline execution plus (optionally) its oracle audit.
struct PipelineReport {
    PipelineConfig config;
    int n = 0;
    std::uint64_t bandwidth_words = 1;
    std::uint64_t rounds_total = 0;
    double claimed_factor = 1.0;
    bool audited = false;
    double max_ratio = -1.0;            // max eta/d over reachable pairs
    std::uint64_t soundness_violations = 0;  // pairs with eta < d or pattern mismatch
    double wall_ms = 0.0;
    RoundLedger ledger{1};
    ApspEstimate estimate;
};

// Dispatch cfg.mode (full | truncated | small_diameter | large_bw | logn |
// exact) on a ledger sized by bandwidth_for. With audit set, compares the
// output against the exact oracle: counts eta < d and reachability-pattern
// mismatches as violations and records max eta/d (infinity when a
// zero-distance pair gets a positive estimate).
PipelineReport run_pipeline(const Graph& g, const PipelineConfig& cfg, bool audit);

// FNV-1a over n and the row-major estimate entries.
std::uint64_t estimate_digest(const ApspEstimate& est);

// Full resolved config, ledger, audit block and estimate digest. Timing is
// the one non-reproducible field, so it only appears on request.
nlohmann::json report_json(const PipelineReport& rep, bool include_timing);

std::string report_csv_header();
std::string report_csv_row(const PipelineReport& rep);

}  // namespace capsp
