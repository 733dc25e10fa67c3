#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "blockkit/baselines.hpp"
#include "blockkit/corpus.hpp"
#include "blockkit/partition.hpp"
#include "blockkit/tlsh.hpp"

namespace blockkit {

// Recall / reduction-ratio report for one blocking run.
struct EvalReport {
    std::string method;
    nlohmann::ordered_json params;
    uint64_t seed = 0;
    uint32_t n = 0;

    uint64_t true_pair_count = 0;
    uint64_t candidate_pairs = 0;
    uint64_t preserved = 0;
    double recall_pct = 100.0;           // 100 * preserved / true_pairs; 100 if no true pairs
    double reduction_ratio_pct = 0.0;    // 100 * (1 - candidate_pairs / C(n,2))

    uint32_t num_blocks = 0;
    std::vector<std::pair<uint32_t, uint64_t>> block_size_histogram;  // (size, count)
    StageTimings timings;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

EvalReport score(const BlockingPartition& partition, std::span<const RecordPair> truth,
                 uint32_t n);
EvalReport score(const CandidatePairSet& pairs, std::span<const RecordPair> truth, uint32_t n);

// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

// ---------------------------------------------------------------------------
// Method dispatch: one entry point for the CLI, the sweeps, and the scaling
// benchmarks. `params` accepts the union of method parameters; unknown keys
// are rejected so misspelled sweep grids fail loudly.
// ---------------------------------------------------------------------------

struct MethodOutput {
    std::string method;
    std::optional<BlockingPartition> partition;
    std::optional<CandidatePairSet> pairs;  // rule method only
    StageTimings timings;
    nlohmann::ordered_json params_echo;
    std::size_t vocab_size = 0;
    uint64_t edge_count = 0;
    uint64_t seed = 0;
};

MethodOutput run_blocking(const Dataset& ds, const std::string& method,
                          const nlohmann::ordered_json& params);

EvalReport score_output(const MethodOutput& out, std::span<const RecordPair> truth,
                        uint32_t n);

// Runs the method over every point of a parameter grid (cartesian product of
// the arrays in `grid`), one independently seeded report per point, ordered by
// grid index.
std::vector<EvalReport> sensitivity_sweep(const Dataset& ds, const std::string& method,
                                          const nlohmann::ordered_json& grid,
                                          uint64_t base_seed, int threads = 1);

// Generates a dataset per size (seed derived from base_seed and the size) and
// times the method end to end.
struct ScalingPoint {
    uint32_t n = 0;
    double seconds = 0;              // best of `repeats` runs
    std::size_t vocab_size = 0;
    StageTimings timings;            // from the best run
};

struct ScalingConfig {
    std::string generator = "rldata";  // "rldata" or "noisy"
    std::string method = "tlsh";
    nlohmann::ordered_json params;     // method params; klsh num_blocks=0 means c=ceil(sqrt(n))
    uint64_t base_seed = 1;
    int repeats = 3;
};

std::vector<ScalingPoint> scaling_sweep(const ScalingConfig& config,
                                        std::span<const uint32_t> sizes);

std::string scaling_csv(const std::string& method, std::span<const ScalingPoint> points);

}  // namespace blockkit
