#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mcsp/instances.hpp"
#include "mcsp/mmas.hpp"
#include "mcsp/stats.hpp"

namespace mcsp {

// Algorithm names accepted by run_benchmark. "mmas-static" is the ablation
// variant: the dynamic heuristic weight is forced to zero.
inline constexpr std::string_view kAlgoGreedy = "greedy";
inline constexpr std::string_view kAlgoMmas = "mmas";
inline constexpr std::string_view kAlgoMmasStatic = "mmas-static";

struct RunOutcome {
    int run = 0;
    std::uint64_t seed = 0;
    int cost = 0;
    int iterations = 0;  // 0 for deterministic algorithms
    double time_to_best_secs = 0.0;
};

struct TrialRecord {
    std::string instance_id;
    std::string algorithm;
    int baseline = 0;  // greedy cost on the same instance
    std::vector<RunOutcome> runs;
    double mean = 0.0;
    int worst = 0;
    int best = 0;
    double difference = 0.0;  // mean - baseline
    double stddev = 0.0;
    double time_secs = 0.0;  // mean time to best
    double t_stat = 0.0;
    double p_value = 1.0;
    Mark mark = Mark::similar;
    std::string error;  // non-empty when the trial failed; such records are kept
                        // in the result list but excluded from CSV output

    bool failed() const { return !error.empty(); }
};

struct BenchOptions {
    // Template for each MMAS run; seed and n_runs are managed per run by the
    // harness, so those two fields are ignored.
    MmasParams params;
    int repeats = 1;
    std::vector<std::string> algorithms{std::string(kAlgoGreedy), std::string(kAlgoMmas)};
    std::uint64_t seed = 0;  // root seed; per-run seeds derive from (instance, algorithm, run)
    double significance = 0.05;
};

// Runs every requested algorithm on every instance and aggregates costs.
// The greedy baseline is computed once per instance regardless of the
// algorithm list; greedy itself, being deterministic, executes once even
// when repeats > 1. Every solution re-validates before aggregation. A
// failing instance or trial yields a record with `error` set; it never
// aborts the remaining work. Single-run trials report t = 0 and no
// significance, there being nothing to test.
std::vector<TrialRecord> run_benchmark(const std::vector<Instance>& instances,
                                       const BenchOptions& options);

// One row per trial: instance,algorithm,baseline,mean,worst,best,difference,
// stddev[,time_secs],t,p,significance. Means, stddev and t carry 4 decimals;
// p switches to scientific notation below 1e-4. include_times=false drops the
// wall-clock column so repeated runs are byte-identical.
void write_summary_csv(std::ostream& out, const std::vector<TrialRecord>& records,
                       bool include_times = true);

// One row per run with full-precision times; parseable back via read_runs_csv.
void write_runs_csv(std::ostream& out, const std::vector<TrialRecord>& records,
                    bool include_times = true);

// Rebuilds TrialRecords (aggregates included) from a runs CSV. Records grouped
// by consecutive (instance, algorithm) rows, as written by write_runs_csv.
std::vector<TrialRecord> read_runs_csv(std::istream& in, double significance = 0.05);

// Plot-ready series for one algorithm: "index mean_cost instance" per line.
void write_cost_series(std::ostream& out, const std::vector<TrialRecord>& records,
                       std::string_view algorithm);

}  // namespace mcsp
