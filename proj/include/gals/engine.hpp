#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gals/graph.hpp"
#include "gals/operators.hpp"
#include "gals/partition.hpp"

namespace gals {

struct GaConfig {
    int iterations = 500;
    int mu = 80;
    int lambda = 60;
    std::uint64_t seed = 0;
    // Emit a trace point every trace_every generations (plus the last).
    int trace_every = 1;
    // Optional early stop after this many generations without improvement.
    std::optional<int> stagnation = std::nullopt;
    // Re-check the safety invariant on every individual the run creates and
    // throw std::logic_error on the first violation.
    bool verify_safety = false;
};

struct TracePoint {
    int generation;
    double best_q;
};

struct RunResult {
    Partition best;
    double q = 0.0;
    int generations = 0;
    std::vector<TracePoint> trace;
    std::uint64_t seed = 0;
    double elapsed_ms = 0.0;
    // Number of safety re-checks performed when verify_safety was set.
    long long safety_checks = 0;
};

struct MultiRunSummary {
    std::vector<RunResult> runs;
    double mean_q = 0.0;
    double min_q = 0.0;
    double max_q = 0.0;
    double stddev_q = 0.0;
    double mean_elapsed_ms = 0.0;
    // Index into runs of the best run; ties keep the earliest.
    int best_run = 0;
};

RunResult run_gals(const Network& net, const GaConfig& cfg);

// Independent runs seeded cfg.seed, cfg.seed + 1, ...
MultiRunSummary run_many(const Network& net, const GaConfig& cfg, int runs);

std::string run_result_json(const Network& net, const RunResult& res);

} // namespace gals
