#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcsp/bench.hpp"
#include "mcsp/block.hpp"
#include "mcsp/config.hpp"
#include "mcsp/exact.hpp"
#include "mcsp/greedy.hpp"
#include "mcsp/instances.hpp"
#include "mcsp/mmas.hpp"
#include "mcsp/rng.hpp"
#include "mcsp/stats.hpp"

namespace {

// Solver knobs shared by solve, bench and tune. A config file is applied
// first; flags given on the command line override it.
struct SolverFlags {
    CLI::App* cmd = nullptr;
    std::string config_path;
    double alpha = 0.0;
    double beta = 0.0;
    double epsilon = 0.0;
    int n_ants = 0;
    double p_best = 0.0;
    double init_pheromone = 0.0;
    double max_time_secs = 0.0;
    int max_stale_iters = 0;
    int max_iterations = 0;
    int n_runs = 0;
    std::uint64_t seed = 0;
    int n_threads = 0;
    bool random_start = false;
    double avg_choices = 0.0;
    double heuristic_a = 0.0;
    double heuristic_b = 0.0;

    void attach(CLI::App& c) {
        cmd = &c;
        c.add_option("--config", config_path, "flat key = value settings file");
        c.add_option("--alpha", alpha, "pheromone exponent");
        c.add_option("--beta", beta, "heuristic exponent");
        c.add_option("--epsilon", epsilon, "evaporation rate");
        c.add_option("--n-ants", n_ants, "ants per iteration");
        c.add_option("--p-best", p_best, "probability mass behind the best solution");
        c.add_option("--init-pheromone", init_pheromone, "initial trail value");
        c.add_option("--max-time", max_time_secs, "per-run wall clock budget in seconds, 0 = off");
        c.add_option("--max-stale", max_stale_iters, "iterations without improvement before a run stops");
        c.add_option("--max-iterations", max_iterations, "iteration cap per run, 0 = off");
        c.add_option("--n-runs", n_runs, "independent runs per solve");
        c.add_option("--seed", seed, "root random seed");
        c.add_option("--n-threads", n_threads, "threads for solution construction");
        c.add_flag("--random-start", random_start, "place ants uniformly at random");
        c.add_option("--avg-choices", avg_choices, "override the average-choices term of the trail bounds");
        c.add_option("--heuristic-a", heuristic_a, "weight of the static (length) heuristic");
        c.add_option("--heuristic-b", heuristic_b, "weight of the dynamic (span) heuristic");
    }

    void apply(mcsp::MmasParams& params) const {
        if (!config_path.empty()) mcsp::apply_mmas_config(mcsp::load_config(config_path), params);
        if (cmd->count("--alpha")) params.alpha = alpha;
        if (cmd->count("--beta")) params.beta = beta;
        if (cmd->count("--epsilon")) params.epsilon = epsilon;
        if (cmd->count("--n-ants")) params.n_ants = n_ants;
        if (cmd->count("--p-best")) params.p_best = p_best;
        if (cmd->count("--init-pheromone")) params.init_pheromone = init_pheromone;
        if (cmd->count("--max-time")) params.max_time_secs = max_time_secs;
        if (cmd->count("--max-stale")) params.max_stale_iters = max_stale_iters;
        if (cmd->count("--max-iterations")) params.max_iterations = max_iterations;
        if (cmd->count("--n-runs")) params.n_runs = n_runs;
        if (cmd->count("--seed")) params.seed = seed;
        if (cmd->count("--n-threads")) params.n_threads = n_threads;
        if (cmd->count("--random-start")) params.random_start = random_start;
        if (cmd->count("--avg-choices")) params.avg_choices_override = avg_choices;
        if (cmd->count("--heuristic-a")) params.weights.a = heuristic_a;
        if (cmd->count("--heuristic-b")) params.weights.b = heuristic_b;
    }
};

void print_partition(const mcsp::Instance& instance, const mcsp::CommonPartition& cp) {
    std::cout << "cost " << cp.size() << '\n';
    for (std::size_t k = 0; k < cp.size(); ++k) {
        std::cout << mcsp::to_string(cp.partition[k]) << ' ' << mcsp::to_string(cp.mapped[k])
                  << ' ' << mcsp::substring(cp.partition[k], instance.x) << '\n';
    }
}

struct GenArgs {
    int length = 0;
    int count = 1;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    std::string prefix = "random";
};

int run_gen(const GenArgs& args) {
    for (int k = 0; k < args.count; ++k) {
        const std::string id = args.prefix + "-" + std::to_string(args.length) + "-" +
                               std::to_string(k);
        const mcsp::Instance instance =
            mcsp::generate_instance(id, args.length, mcsp::derive_seed(args.seed, k));
        const std::string path = args.out_dir + "/" + id + ".txt";
        mcsp::save_instance(path, instance);
        std::cout << path << '\n';
    }
    return 0;
}

struct SolveArgs {
    std::string instance_path;
    std::string algo = "mmas";
    std::string telemetry_path;
};

int run_solve(const SolveArgs& args, const SolverFlags& flags) {
    const mcsp::Instance instance = mcsp::load_instance(args.instance_path);
    if (args.algo == "greedy") {
        print_partition(instance, mcsp::greedy_mcsp(instance.x, instance.y));
        return 0;
    }
    if (args.algo == "exact") {
        const mcsp::ExactResult result = mcsp::exact_mcsp(instance.x, instance.y);
        print_partition(instance, result.witness);
        return 0;
    }
    mcsp::MmasParams params;
    flags.apply(params);
    const mcsp::SolveResult result = mcsp::solve(instance.x, instance.y, params);
    print_partition(instance, result.best.common_partition);
    std::cerr << "best of " << result.runs.size() << " run(s), found after "
              << result.runs[result.best_run].time_to_best_secs << " s\n";
    if (!args.telemetry_path.empty()) {
        std::ofstream out(args.telemetry_path);
        if (!out) throw std::runtime_error("cannot write telemetry file: " + args.telemetry_path);
        mcsp::write_telemetry_csv(out, result);
    }
    return 0;
}

struct BenchArgs {
    std::vector<std::string> instance_paths;
    std::string fasta_path;
    std::size_t min_len = 1;
    std::size_t max_len = SIZE_MAX;
    int limit = 0;  // 0 = no limit
    std::uint64_t shuffle_seed = 0;
    int repeats = 1;
    std::vector<std::string> algorithms;
    bool ablation = false;
    std::uint64_t root_seed = 0;
    double significance = 0.05;
    bool stable_output = false;
    std::string out_prefix;
};

std::vector<mcsp::Instance> collect_instances(const BenchArgs& args) {
    std::vector<mcsp::Instance> instances;
    for (const std::string& path : args.instance_paths) {
        instances.push_back(mcsp::load_instance(path));
    }
    if (!args.fasta_path.empty()) {
        auto records = mcsp::filter_by_length(mcsp::load_fasta(args.fasta_path), args.min_len,
                                              args.max_len);
        if (args.limit > 0 && records.size() > static_cast<std::size_t>(args.limit)) {
            records.resize(static_cast<std::size_t>(args.limit));
        }
        for (std::size_t i = 0; i < records.size(); ++i) {
            instances.push_back(mcsp::shuffled_instance(
                records[i].id, std::move(records[i].sequence),
                mcsp::derive_seed(args.shuffle_seed, i)));
        }
    }
    return instances;
}

int run_bench(const BenchArgs& args, const SolverFlags& flags) {
    const std::vector<mcsp::Instance> instances = collect_instances(args);
    if (instances.empty()) {
        std::cerr << "error: no instances given\n";
        return 1;
    }

    mcsp::BenchOptions options;
    flags.apply(options.params);
    options.repeats = args.repeats;
    options.seed = args.root_seed;
    options.significance = args.significance;
    if (!args.algorithms.empty()) options.algorithms = args.algorithms;
    if (args.ablation) {
        options.algorithms = {std::string(mcsp::kAlgoGreedy), std::string(mcsp::kAlgoMmas),
                              std::string(mcsp::kAlgoMmasStatic)};
    }

    const std::vector<mcsp::TrialRecord> records = mcsp::run_benchmark(instances, options);
    bool any_ok = false;
    for (const mcsp::TrialRecord& r : records) {
        if (r.failed()) {
            std::cerr << "warning: " << r.instance_id << '/' << r.algorithm
                      << " failed: " << r.error << '\n';
        } else {
            any_ok = true;
        }
    }

    const bool include_times = !args.stable_output;
    mcsp::write_summary_csv(std::cout, records, include_times);
    if (!args.out_prefix.empty()) {
        auto open = [](const std::string& path) {
            std::ofstream out(path);
            if (!out) throw std::runtime_error("cannot write output file: " + path);
            return out;
        };
        auto summary = open(args.out_prefix + "-summary.csv");
        mcsp::write_summary_csv(summary, records, include_times);
        auto runs = open(args.out_prefix + "-runs.csv");
        mcsp::write_runs_csv(runs, records, include_times);
        for (const std::string& algo : options.algorithms) {
            if (algo == mcsp::kAlgoGreedy) continue;
            auto series = open(args.out_prefix + "-" + algo + ".dat");
            mcsp::write_cost_series(series, records, algo);
        }
    }
    return any_ok ? 0 : 1;
}

struct TuneArgs {
    std::vector<std::string> instance_paths;
    int random_count = 0;
    int random_length = 100;
    std::uint64_t gen_seed = 0;
    int repeats = 1;
    std::uint64_t root_seed = 0;
    std::string out_path;
};

int run_tune(const TuneArgs& args, const SolverFlags& flags) {
    std::vector<mcsp::Instance> instances;
    for (const std::string& path : args.instance_paths) {
        instances.push_back(mcsp::load_instance(path));
    }
    for (int k = 0; k < args.random_count; ++k) {
        const std::string id = "tune-" + std::to_string(args.random_length) + "-" +
                               std::to_string(k);
        instances.push_back(mcsp::generate_instance(id, args.random_length,
                                                    mcsp::derive_seed(args.gen_seed, k)));
    }
    if (instances.empty()) {
        std::cerr << "error: no instances given\n";
        return 1;
    }

    // Short default budget: the full grid is 243 settings, so per-run work
    // must stay small unless the caller raises it explicitly.
    mcsp::MmasParams base;
    base.max_iterations = 30;
    base.max_time_secs = 1.0;
    flags.apply(base);

    const std::vector<double> alphas{1.0, 2.0, 3.0};
    const std::vector<double> betas{3.0, 5.0, 10.0};
    const std::vector<double> epsilons{0.02, 0.04, 0.05};
    const std::vector<int> ant_counts{20, 60, 100};
    const std::vector<double> p_bests{0.005, 0.05, 0.5};

    std::vector<mcsp::MmasParams> settings;
    for (double a : alphas)
        for (double b : betas)
            for (double e : epsilons)
                for (int ants : ant_counts)
                    for (double pb : p_bests) {
                        mcsp::MmasParams p = base;
                        p.alpha = a;
                        p.beta = b;
                        p.epsilon = e;
                        p.n_ants = ants;
                        p.p_best = pb;
                        p.n_runs = 1;
                        settings.push_back(p);
                    }

    std::vector<std::vector<double>> costs(instances.size(),
                                           std::vector<double>(settings.size(), 0.0));
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const mcsp::CommonSubstringGraph graph(instances[i].x, instances[i].y);
        for (std::size_t j = 0; j < settings.size(); ++j) {
            double sum = 0.0;
            for (int r = 0; r < args.repeats; ++r) {
                mcsp::MmasParams p = settings[j];
                p.seed = mcsp::derive_seed(args.root_seed, i, j, static_cast<std::uint64_t>(r));
                sum += mcsp::solve(graph, p).best.cost;
            }
            costs[i][j] = sum / args.repeats;
        }
        std::cerr << "tuned instance " << instances[i].id << " (" << (i + 1) << '/'
                  << instances.size() << ")\n";
    }

    const std::vector<mcsp::RankedSetting> ranked = mcsp::tuning_rank(costs);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!args.out_path.empty()) {
        file.open(args.out_path);
        if (!file) throw std::runtime_error("cannot write output file: " + args.out_path);
        out = &file;
    }
    *out << "rank,setting,alpha,beta,epsilon,n_ants,p_best,score\n";
    char buf[160];
    for (std::size_t pos = 0; pos < ranked.size(); ++pos) {
        const mcsp::MmasParams& p = settings[ranked[pos].index];
        std::snprintf(buf, sizeof(buf), "%zu,%zu,%g,%g,%g,%d,%g,%.4f\n", pos + 1,
                      ranked[pos].index, p.alpha, p.beta, p.epsilon, p.n_ants, p.p_best,
                      ranked[pos].rank);
        *out << buf;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum common string partition toolkit"};
    app.require_subcommand(1);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Generate random instance files");
    gen->add_option("--length", gen_args.length, "instance length")->required();
    gen->add_option("--count", gen_args.count, "number of instances");
    gen->add_option("--seed", gen_args.seed, "generation seed");
    gen->add_option("--out-dir", gen_args.out_dir, "output directory");
    gen->add_option("--prefix", gen_args.prefix, "file name prefix");

    SolveArgs solve_args;
    SolverFlags solve_flags;
    CLI::App* solve = app.add_subcommand("solve", "Solve one instance file");
    solve->add_option("instance", solve_args.instance_path, "two-line instance file")->required();
    solve->add_option("--algo", solve_args.algo, "greedy, mmas or exact")
        ->check(CLI::IsMember({"greedy", "mmas", "exact"}));
    solve->add_option("--telemetry", solve_args.telemetry_path,
                      "write per-iteration progress CSV here");
    solve_flags.attach(*solve);

    BenchArgs bench_args;
    SolverFlags bench_flags;
    CLI::App* bench = app.add_subcommand("bench", "Benchmark algorithms over instance files");
    bench->add_option("instances", bench_args.instance_paths, "two-line instance files");
    bench->add_option("--fasta", bench_args.fasta_path, "ingest sequences from a FASTA file");
    bench->add_option("--min-len", bench_args.min_len, "minimum FASTA sequence length");
    bench->add_option("--max-len", bench_args.max_len, "maximum FASTA sequence length");
    bench->add_option("--limit", bench_args.limit, "keep only the first N FASTA records");
    bench->add_option("--shuffle-seed", bench_args.shuffle_seed,
                      "seed for pairing FASTA sequences with shuffles");
    bench->add_option("--repeats", bench_args.repeats, "runs per instance and algorithm");
    bench->add_option("--algo", bench_args.algorithms,
                      "algorithms to compare (greedy, mmas, mmas-static); repeatable")
        ->check(CLI::IsMember({"greedy", "mmas", "mmas-static"}));
    bench->add_flag("--ablation", bench_args.ablation,
                    "compare greedy, mmas and mmas with the dynamic heuristic disabled");
    bench->add_option("--bench-seed", bench_args.root_seed, "root seed for per-run seeds");
    bench->add_option("--significance", bench_args.significance, "t-test significance level");
    bench->add_flag("--stable-output", bench_args.stable_output,
                    "omit wall-clock columns so identical seeds give identical bytes");
    bench->add_option("--out", bench_args.out_prefix,
                      "write <prefix>-summary.csv, <prefix>-runs.csv and series files");
    bench_flags.attach(*bench);

    TuneArgs tune_args;
    SolverFlags tune_flags;
    CLI::App* tune = app.add_subcommand(
        "tune", "Rank the parameter grid (243 settings; defaults to a 30-iteration budget)");
    tune->add_option("instances", tune_args.instance_paths, "two-line instance files");
    tune->add_option("--random", tune_args.random_count, "also tune on N generated instances");
    tune->add_option("--length", tune_args.random_length, "length of generated instances");
    tune->add_option("--gen-seed", tune_args.gen_seed, "seed for generated instances");
    tune->add_option("--repeats", tune_args.repeats, "runs per instance and setting");
    tune->add_option("--tune-seed", tune_args.root_seed, "root seed for per-run seeds");
    tune->add_option("--out", tune_args.out_path, "write the ranking CSV here");
    tune_flags.attach(*tune);

    try {
        app.parse(argc, argv);
        if (*gen) return run_gen(gen_args);
        if (*solve) return run_solve(solve_args, solve_flags);
        if (*bench) return run_bench(bench_args, bench_flags);
        if (*tune) return run_tune(tune_args, tune_flags);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
