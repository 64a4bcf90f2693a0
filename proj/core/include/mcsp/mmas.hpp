#pragma once

#include "mcsp/block.hpp"
#include "mcsp/csgraph.hpp"
#include "mcsp/heuristics.hpp"
#include "mcsp/rng.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace mcsp {

struct MmasParams {
    double alpha = 2.0;            // pheromone exponent
    double beta = 10.0;            // heuristic exponent
    double epsilon = 0.05;         // evaporation rate, in (0, 1]
    int n_ants = 100;
    double p_best = 0.05;          // in (0, 1); shapes the lower pheromone bound
    double init_pheromone = 10.0;  // deliberately above the first tau_max
    double max_time_secs = 60.0;   // per run; <= 0 disables the time budget
    int max_stale_iters = 500;     // iterations without a global-best improvement
    int max_iterations = 0;        // per run; 0 disables the cap
    int n_runs = 1;
    HeuristicWeights weights;
    std::uint64_t seed = 0;
    int n_threads = 1;             // ant constructions per iteration run concurrently
    bool random_start = false;     // draw start vertices instead of even spacing
    double avg_choices_override = 0.0;  // 0: use edge_count / n

    /// Throws std::invalid_argument on any out-of-range field.
    void validate() const;
};

/// Pheromone per edge block, keyed by CommonSubstringGraph::edge_index.
/// add and scale leave values unclamped; set_bounds (called at the end of
/// every scheduled update) pulls all entries back into [tau_min, tau_max].
class PheromoneTable {
  public:
    PheromoneTable(std::size_t n_edges, double initial);

    std::size_t size() const { return tau_.size(); }
    double at(std::size_t e) const { return tau_[e]; }

    void add(std::size_t e, double amount);
    void scale(double factor);

    bool bounded() const { return bounded_; }
    double tau_min() const;
    double tau_max() const;

    /// Records the bounds and clamps every entry into [tau_min, tau_max].
    void set_bounds(double tau_min, double tau_max);

  private:
    void clamp_all();

    std::vector<double> tau_;
    double tau_min_ = 0.0;
    double tau_max_ = 0.0;
    bool bounded_ = false;
};

struct Solution {
    CommonPartition common_partition;
    int cost = 0;

    double fitness() const { return 1.0 / cost; }
};

/// Wraps a partition as a Solution; cost is the number of blocks.
Solution make_solution(CommonPartition cp);

struct SearchState {
    std::optional<Solution> iteration_best;
    std::optional<Solution> global_best;
    int iteration = 0;
    int stale_iterations = 0;
};

/// Fresh table at init_pheromone and zeroed counters. Bounds stay unset
/// until the first global best exists.
std::pair<PheromoneTable, SearchState> initialize(const CommonSubstringGraph& g,
                                                  const MmasParams& params);

/// Evenly spread start vertex of ant i among m ants: floor(n/m) * i mod n.
int start_position(int ant_index, int n, int n_ants);

/// tau_max = 1 / (epsilon * cost_gb);
/// tau_min = tau_max * (1 - p_best^(1/n)) / ((avg - 1) * p_best^(1/n)).
/// Throws std::invalid_argument when cost_gb < 1 or avg <= 1.
std::pair<double, double> compute_bounds(int cost_gb, double epsilon, double p_best, int n,
                                         double avg);

/// Selection probabilities tau^alpha * eta^beta over the given edges,
/// normalized to sum 1.
std::vector<double> edge_probabilities(const CommonSubstringGraph& g, const OccupancyState& occ,
                                       std::span<const Block> edges, const PheromoneTable& tau,
                                       const MmasParams& params);

/// Samples one available edge at v. Throws std::logic_error if none exists;
/// construction keeps at least one edge available at every unconsumed vertex.
Block choose_edge(const CommonSubstringGraph& g, const OccupancyState& occ, int v, int v_start,
                  const PheromoneTable& tau, const MmasParams& params, Rng& rng);

/// Picks a free match of b with minimum free span; ties drawn uniformly.
/// Throws std::logic_error when b has no free match.
Block choose_match(const CommonSubstringGraph& g, const OccupancyState& occ, const Block& b,
                   Rng& rng);

/// One ant's full construction: walk cyclically from the start vertex,
/// sampling an edge and a match per step, until X is tiled. Pairs are
/// returned sorted by X start.
Solution construct_solution(const CommonSubstringGraph& g, const PheromoneTable& tau,
                            const MmasParams& params, int ant_index, Rng& rng);

/// Multiplies every entry by (1 - epsilon).
void evaporate(PheromoneTable& tau, double epsilon);

/// Adds epsilon * fitness(sol) to every edge block of sol.
void deposit(PheromoneTable& tau, const CommonSubstringGraph& g, const Solution& sol,
             double epsilon);

enum class UpdateSource { iteration_best, global_best };

/// Deposit schedule by iteration count c: the iteration best for c <= 50,
/// then mixtures that thin out (every 5th up to 100, every 4th up to 200,
/// every 3rd up to 400, every 2nd up to 800), then the iteration best again.
UpdateSource pheromone_update_source(int iteration);

/// End-of-iteration pheromone step: evaporate, deposit from the scheduled
/// source, recompute bounds from the global best and clamp. Requires both
/// bests to be set.
void scheduled_update(const SearchState& state, const CommonSubstringGraph& g,
                      PheromoneTable& tau, const MmasParams& params);

struct IterationStat {
    int iteration = 0;
    int best_cost_iter = 0;
    int best_cost_global = 0;
    double elapsed_secs = 0.0;
};

struct RunResult {
    Solution best;
    int iterations = 0;
    double time_to_best_secs = 0.0;
    double total_time_secs = 0.0;
    std::vector<IterationStat> stats;
};

struct SolveResult {
    Solution best;
    std::size_t best_run = 0;
    std::vector<RunResult> runs;
};

/// Snapshot passed to the observer after each iteration's pheromone update.
struct IterationView {
    int run = 0;
    int iteration = 0;
    int best_cost_iter = 0;
    int best_cost_global = 0;
    const PheromoneTable& pheromone;
};

using IterationObserver = std::function<void(const IterationView&)>;

/// Full solver: n_runs independent runs of { construct n_ants solutions,
/// track bests, scheduled_update } until the time, staleness or iteration
/// budget is hit. Deterministic for a fixed seed: every (run, iteration,
/// ant) derives its own stream, so n_threads does not affect results.
SolveResult solve(const CommonSubstringGraph& g, const MmasParams& params,
                  const IterationObserver& observer = {});

/// Convenience overload; builds the graph first. Throws std::invalid_argument
/// on unrelated inputs.
SolveResult solve(std::string_view x, std::string_view y, const MmasParams& params,
                  const IterationObserver& observer = {});

/// Per-iteration telemetry as CSV: run,iteration,best_cost_iter,
/// best_cost_global,elapsed_ms.
void write_telemetry_csv(std::ostream& out, const SolveResult& result);

}  // namespace mcsp
