#include "mcsp/mmas.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace mcsp {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<double> edge_weights(const CommonSubstringGraph& g, const OccupancyState& occ,
                                 std::span<const Block> edges, const PheromoneTable& tau,
                                 const MmasParams& params) {
    std::vector<double> w(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const double eta = combined_heuristic(g, occ, edges[i], params.weights);
        w[i] = std::pow(tau.at(g.edge_index(edges[i])), params.alpha) *
               std::pow(eta, params.beta);
    }
    return w;
}

}  // namespace

void MmasParams::validate() const {
    auto reject = [](const std::string& what) {
        throw std::invalid_argument("mmas params: " + what);
    };
    if (!(alpha >= 0.0)) reject("alpha must be >= 0");
    if (!(beta >= 0.0)) reject("beta must be >= 0");
    if (!(epsilon > 0.0 && epsilon <= 1.0)) reject("epsilon must be in (0, 1]");
    if (n_ants < 1) reject("n_ants must be positive");
    if (!(p_best > 0.0 && p_best < 1.0)) reject("p_best must be in (0, 1)");
    if (!(init_pheromone > 0.0)) reject("init_pheromone must be positive");
    if (max_stale_iters < 1) reject("max_stale_iters must be positive");
    if (max_iterations < 0) reject("max_iterations must be >= 0");
    if (n_runs < 1) reject("n_runs must be positive");
    if (!(weights.a >= 0.0) || !(weights.b >= 0.0)) reject("heuristic weights must be >= 0");
    if (weights.a == 0.0 && weights.b == 0.0) reject("heuristic weights must not both be zero");
    if (n_threads < 1) reject("n_threads must be positive");
    if (!(avg_choices_override >= 0.0)) reject("avg_choices_override must be >= 0");
}

PheromoneTable::PheromoneTable(std::size_t n_edges, double initial) : tau_(n_edges, initial) {
    if (n_edges == 0) {
        throw std::invalid_argument("pheromone table: no edges");
    }
    if (!(initial > 0.0)) {
        throw std::invalid_argument("pheromone table: initial value must be positive");
    }
}

void PheromoneTable::add(std::size_t e, double amount) { tau_[e] += amount; }

void PheromoneTable::scale(double factor) {
    for (double& t : tau_) t *= factor;
}

double PheromoneTable::tau_min() const {
    if (!bounded_) throw std::logic_error("pheromone table: bounds not set");
    return tau_min_;
}

double PheromoneTable::tau_max() const {
    if (!bounded_) throw std::logic_error("pheromone table: bounds not set");
    return tau_max_;
}

void PheromoneTable::set_bounds(double tau_min, double tau_max) {
    if (!(tau_min >= 0.0) || !(tau_min <= tau_max)) {
        throw std::invalid_argument("pheromone table: bounds must satisfy 0 <= tau_min <= tau_max");
    }
    tau_min_ = tau_min;
    tau_max_ = tau_max;
    bounded_ = true;
    clamp_all();
}

void PheromoneTable::clamp_all() {
    for (double& t : tau_) t = std::clamp(t, tau_min_, tau_max_);
}

Solution make_solution(CommonPartition cp) {
    Solution sol;
    sol.cost = static_cast<int>(cp.size());
    sol.common_partition = std::move(cp);
    return sol;
}

std::pair<PheromoneTable, SearchState> initialize(const CommonSubstringGraph& g,
                                                  const MmasParams& params) {
    return {PheromoneTable(g.edge_count(), params.init_pheromone), SearchState{}};
}

int start_position(int ant_index, int n, int n_ants) {
    if (n < 1 || n_ants < 1 || ant_index < 0 || ant_index >= n_ants) {
        throw std::invalid_argument("start_position: need 0 <= ant_index < n_ants and n >= 1");
    }
    return (n / n_ants) * ant_index % n;
}

std::pair<double, double> compute_bounds(int cost_gb, double epsilon, double p_best, int n,
                                         double avg) {
    if (cost_gb < 1) {
        throw std::invalid_argument("compute_bounds: cost_gb must be >= 1");
    }
    if (!(avg > 1.0)) {
        throw std::invalid_argument("compute_bounds: avg must exceed 1");
    }
    const double tau_max = 1.0 / (epsilon * cost_gb);
    const double root = std::pow(p_best, 1.0 / n);
    const double tau_min = tau_max * (1.0 - root) / ((avg - 1.0) * root);
    return {tau_max, tau_min};
}

std::vector<double> edge_probabilities(const CommonSubstringGraph& g, const OccupancyState& occ,
                                       std::span<const Block> edges, const PheromoneTable& tau,
                                       const MmasParams& params) {
    if (edges.empty()) {
        throw std::invalid_argument("edge_probabilities: empty edge set");
    }
    std::vector<double> w = edge_weights(g, occ, edges, tau, params);
    double total = 0.0;
    for (double v : w) total += v;
    if (!(total > 0.0) || !std::isfinite(total)) {
        std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(w.size()));
        return w;
    }
    for (double& v : w) v /= total;
    return w;
}

Block choose_edge(const CommonSubstringGraph& g, const OccupancyState& occ, int v, int v_start,
                  const PheromoneTable& tau, const MmasParams& params, Rng& rng) {
    const std::vector<Block> avail = available_edges(g, occ, v, v_start);
    if (avail.empty()) {
        throw std::logic_error("choose_edge: no available edge at vertex " + std::to_string(v));
    }
    if (avail.size() == 1) return avail[0];

    const std::vector<double> w = edge_weights(g, occ, avail, tau, params);
    double total = 0.0;
    for (double value : w) total += value;
    if (!(total > 0.0) || !std::isfinite(total)) {
        return avail[rng.below(avail.size())];
    }
    const double r = rng.unit() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < avail.size(); ++i) {
        acc += w[i];
        if (r < acc) return avail[i];
    }
    return avail.back();
}

Block choose_match(const CommonSubstringGraph& g, const OccupancyState& occ, const Block& b,
                   Rng& rng) {
    const std::vector<Block> free = free_matches(g, occ, b);
    if (free.empty()) {
        throw std::logic_error("choose_match: no free match for " + to_string(b));
    }
    int best_span = std::numeric_limits<int>::max();
    std::vector<std::size_t> ties;
    for (std::size_t i = 0; i < free.size(); ++i) {
        const int s = free_span(g, occ, free[i]);
        if (s < best_span) {
            best_span = s;
            ties.clear();
        }
        if (s == best_span) ties.push_back(i);
    }
    const std::size_t pick = ties.size() == 1 ? ties[0] : ties[rng.below(ties.size())];
    return free[pick];
}

Solution construct_solution(const CommonSubstringGraph& g, const PheromoneTable& tau,
                            const MmasParams& params, int ant_index, Rng& rng) {
    if (tau.size() != g.edge_count()) {
        throw std::invalid_argument("construct_solution: pheromone table does not match graph");
    }
    const int n = g.size();
    const int v_start = params.random_start
                            ? static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))
                            : start_position(ant_index, n, params.n_ants);

    OccupancyState occ(n);
    CommonPartition cp;
    int v = v_start;
    while (!occ.full()) {
        const Block b = choose_edge(g, occ, v, v_start, tau, params, rng);
        const Block m = choose_match(g, occ, b, rng);
        occ.occupy(m);
        cp.partition.push_back(b);
        cp.mapped.push_back(m);
        v = (b.last + 1) % n;
    }
    if (v != v_start) {
        throw std::logic_error("construct_solution: walk did not return to its start");
    }

    std::vector<std::size_t> order(cp.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return cp.partition[a].first < cp.partition[b].first;
    });
    CommonPartition sorted;
    sorted.partition.reserve(cp.size());
    sorted.mapped.reserve(cp.size());
    for (std::size_t i : order) {
        sorted.partition.push_back(cp.partition[i]);
        sorted.mapped.push_back(cp.mapped[i]);
    }
    return make_solution(std::move(sorted));
}

void evaporate(PheromoneTable& tau, double epsilon) { tau.scale(1.0 - epsilon); }

void deposit(PheromoneTable& tau, const CommonSubstringGraph& g, const Solution& sol,
             double epsilon) {
    const double amount = epsilon * sol.fitness();
    for (const Block& b : sol.common_partition.partition) {
        tau.add(g.edge_index(b), amount);
    }
}

UpdateSource pheromone_update_source(int iteration) {
    if (iteration < 1) {
        throw std::invalid_argument("pheromone_update_source: iteration must be >= 1");
    }
    if (iteration <= 50) return UpdateSource::iteration_best;
    if (iteration <= 100) {
        return iteration % 5 == 0 ? UpdateSource::iteration_best : UpdateSource::global_best;
    }
    if (iteration <= 200) {
        return iteration % 4 == 0 ? UpdateSource::iteration_best : UpdateSource::global_best;
    }
    if (iteration <= 400) {
        return iteration % 3 == 0 ? UpdateSource::iteration_best : UpdateSource::global_best;
    }
    if (iteration <= 800) {
        return iteration % 2 == 0 ? UpdateSource::iteration_best : UpdateSource::global_best;
    }
    return UpdateSource::iteration_best;
}

void scheduled_update(const SearchState& state, const CommonSubstringGraph& g,
                      PheromoneTable& tau, const MmasParams& params) {
    if (!state.iteration_best || !state.global_best) {
        throw std::logic_error("scheduled_update: iteration and global bests must be set");
    }
    evaporate(tau, params.epsilon);
    const Solution& source = pheromone_update_source(state.iteration) == UpdateSource::iteration_best
                                 ? *state.iteration_best
                                 : *state.global_best;
    deposit(tau, g, source, params.epsilon);

    const double avg = params.avg_choices_override > 0.0
                           ? params.avg_choices_override
                           : static_cast<double>(g.edge_count()) / g.size();
    const double tau_max = 1.0 / (params.epsilon * state.global_best->cost);
    double tau_min = tau_max;
    if (avg > 1.0) {
        tau_min = compute_bounds(state.global_best->cost, params.epsilon, params.p_best, g.size(),
                                 avg)
                      .second;
        // Short inputs can push the formula past tau_max; the bound is a
        // floor, never an inversion.
        tau_min = std::min(tau_min, tau_max);
    }
    tau.set_bounds(tau_min, tau_max);
}

namespace {

std::vector<Solution> construct_iteration(const CommonSubstringGraph& g, const PheromoneTable& tau,
                                          const MmasParams& params, int run, int iteration) {
    std::vector<Solution> sols(static_cast<std::size_t>(params.n_ants));
    auto build_range = [&](int begin, int end) {
        for (int ant = begin; ant < end; ++ant) {
            Rng rng(derive_seed(params.seed, static_cast<std::uint64_t>(run),
                                static_cast<std::uint64_t>(iteration),
                                static_cast<std::uint64_t>(ant)));
            sols[static_cast<std::size_t>(ant)] = construct_solution(g, tau, params, ant, rng);
        }
    };

    const int n_threads = std::min(params.n_threads, params.n_ants);
    if (n_threads <= 1) {
        build_range(0, params.n_ants);
        return sols;
    }

    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n_threads));
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) {
        const int begin = params.n_ants * t / n_threads;
        const int end = params.n_ants * (t + 1) / n_threads;
        pool.emplace_back([&, t, begin, end] {
            try {
                build_range(begin, end);
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return sols;
}

}  // namespace

SolveResult solve(const CommonSubstringGraph& g, const MmasParams& params,
                  const IterationObserver& observer) {
    params.validate();

    SolveResult result;
    result.runs.reserve(static_cast<std::size_t>(params.n_runs));
    for (int run = 0; run < params.n_runs; ++run) {
        auto [tau, state] = initialize(g, params);
        RunResult rr;
        const auto run_start = std::chrono::steady_clock::now();
        for (int iteration = 1;; ++iteration) {
            state.iteration = iteration;

            const std::vector<Solution> sols = construct_iteration(g, tau, params, run, iteration);
            const Solution* best = &sols.front();
            for (const Solution& s : sols) {
                if (s.cost < best->cost) best = &s;
            }
            state.iteration_best = *best;

            if (!state.global_best || best->cost < state.global_best->cost) {
                state.global_best = *best;
                state.stale_iterations = 0;
                rr.time_to_best_secs = seconds_since(run_start);
            } else {
                ++state.stale_iterations;
            }

            scheduled_update(state, g, tau, params);

            const double elapsed = seconds_since(run_start);
            rr.stats.push_back(
                IterationStat{iteration, best->cost, state.global_best->cost, elapsed});
            if (observer) {
                observer(IterationView{run, iteration, best->cost, state.global_best->cost, tau});
            }

            if (params.max_iterations > 0 && iteration >= params.max_iterations) break;
            if (state.stale_iterations >= params.max_stale_iters) break;
            if (params.max_time_secs > 0.0 && elapsed >= params.max_time_secs) break;
        }
        rr.best = *state.global_best;
        rr.iterations = state.iteration;
        rr.total_time_secs = seconds_since(run_start);
        result.runs.push_back(std::move(rr));
    }

    std::size_t best_run = 0;
    for (std::size_t r = 1; r < result.runs.size(); ++r) {
        if (result.runs[r].best.cost < result.runs[best_run].best.cost) best_run = r;
    }
    result.best_run = best_run;
    result.best = result.runs[best_run].best;
    return result;
}

SolveResult solve(std::string_view x, std::string_view y, const MmasParams& params,
                  const IterationObserver& observer) {
    const CommonSubstringGraph g{std::string(x), std::string(y)};
    return solve(g, params, observer);
}

void write_telemetry_csv(std::ostream& out, const SolveResult& result) {
    out << "run,iteration,best_cost_iter,best_cost_global,elapsed_ms\n";
    char ms[32];
    for (std::size_t r = 0; r < result.runs.size(); ++r) {
        for (const IterationStat& s : result.runs[r].stats) {
            std::snprintf(ms, sizeof ms, "%.3f", s.elapsed_secs * 1000.0);
            out << r << ',' << s.iteration << ',' << s.best_cost_iter << ','
                << s.best_cost_global << ',' << ms << '\n';
        }
    }
}

}  // namespace mcsp
