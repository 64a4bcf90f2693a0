#include "mcsp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mcsp/block.hpp"
#include "mcsp/csgraph.hpp"
#include "mcsp/greedy.hpp"
#include "mcsp/rng.hpp"

namespace mcsp {

namespace {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void check_solution(const CommonPartition& cp, const Instance& instance) {
    const ValidationResult v = validate_common_partition(cp, instance.x, instance.y);
    if (!v) {
        throw std::logic_error("solver produced an invalid partition (" +
                               std::string(to_string(v.reason)) + ")");
    }
}

void aggregate(TrialRecord& record, double significance) {
    const auto& runs = record.runs;
    std::vector<int> costs(runs.size());
    for (std::size_t i = 0; i < runs.size(); ++i) costs[i] = runs[i].cost;

    record.best = *std::min_element(costs.begin(), costs.end());
    record.worst = *std::max_element(costs.begin(), costs.end());
    double time_sum = 0.0;
    for (const RunOutcome& r : runs) time_sum += r.time_to_best_secs;
    record.time_secs = time_sum / static_cast<double>(runs.size());

    if (costs.size() >= 2) {
        const TTestResult t = t_test(record.baseline, costs, significance);
        record.mean = t.mean;
        record.stddev = t.stddev;
        record.t_stat = t.t;
        record.p_value = t.p;
        record.mark = t.mark;
    } else {
        record.mean = costs.front();
        record.stddev = 0.0;
        record.t_stat = 0.0;
        record.p_value = 1.0;
        record.mark = Mark::similar;
    }
    record.difference = record.mean - record.baseline;
}

RunOutcome run_mmas_once(const CommonSubstringGraph& graph, const Instance& instance,
                         const MmasParams& base, std::uint64_t root, std::string_view algo,
                         int run) {
    MmasParams params = base;
    params.n_runs = 1;
    params.seed = derive_seed(root, fnv1a64(instance.id), fnv1a64(algo),
                              static_cast<std::uint64_t>(run));
    const SolveResult result = solve(graph, params);
    check_solution(result.best.common_partition, instance);
    return {run, params.seed, result.best.cost, result.runs.front().iterations,
            result.runs.front().time_to_best_secs};
}

// %.*f with the global C locale, so the decimal point is always '.'.
void append_fixed(std::string& out, double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    out += buf;
}

void append_p_value(std::string& out, double p) {
    char buf[64];
    if (p < 1e-4) {
        std::snprintf(buf, sizeof(buf), "%.6e", p);
    } else {
        std::snprintf(buf, sizeof(buf), "%.4f", p);
    }
    out += buf;
}

void append_exact(std::string& out, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

[[noreturn]] void csv_error(int line_no, const std::string& what) {
    std::ostringstream msg;
    msg << "runs csv line " << line_no << ": " << what;
    throw std::runtime_error(msg.str());
}

}  // namespace

std::vector<TrialRecord> run_benchmark(const std::vector<Instance>& instances,
                                       const BenchOptions& options) {
    if (options.repeats < 1) throw std::invalid_argument("bench repeats must be >= 1");
    for (const std::string& algo : options.algorithms) {
        if (algo != kAlgoGreedy && algo != kAlgoMmas && algo != kAlgoMmasStatic) {
            throw std::invalid_argument("unknown algorithm: " + algo);
        }
    }

    std::vector<TrialRecord> records;
    for (const Instance& instance : instances) {
        std::vector<TrialRecord> trial;
        for (const std::string& algo : options.algorithms) {
            trial.push_back({.instance_id = instance.id, .algorithm = algo});
        }
        std::size_t completed = 0;
        try {
            const CommonSubstringGraph graph(instance.x, instance.y);

            const auto greedy_started = std::chrono::steady_clock::now();
            const CommonPartition greedy_solution = greedy_mcsp(instance.x, instance.y);
            const double greedy_secs = seconds_since(greedy_started);
            check_solution(greedy_solution, instance);
            const int baseline = static_cast<int>(greedy_solution.size());

            for (TrialRecord& record : trial) {
                record.baseline = baseline;
                if (record.algorithm == kAlgoGreedy) {
                    record.runs.push_back({0, 0, baseline, 0, greedy_secs});
                } else {
                    MmasParams params = options.params;
                    if (record.algorithm == kAlgoMmasStatic) params.weights.b = 0.0;
                    for (int run = 0; run < options.repeats; ++run) {
                        record.runs.push_back(run_mmas_once(graph, instance, params,
                                                            options.seed, record.algorithm, run));
                    }
                }
                aggregate(record, options.significance);
                ++completed;
            }
        } catch (const std::exception& e) {
            for (std::size_t i = completed; i < trial.size(); ++i) trial[i].error = e.what();
        }
        records.insert(records.end(), std::make_move_iterator(trial.begin()),
                       std::make_move_iterator(trial.end()));
    }
    return records;
}

void write_summary_csv(std::ostream& out, const std::vector<TrialRecord>& records,
                       bool include_times) {
    out << (include_times
                ? "instance,algorithm,baseline,mean,worst,best,difference,stddev,time_secs,t,p,"
                  "significance\n"
                : "instance,algorithm,baseline,mean,worst,best,difference,stddev,t,p,"
                  "significance\n");
    for (const TrialRecord& r : records) {
        if (r.failed()) continue;
        std::string row = r.instance_id;
        row += ',';
        row += r.algorithm;
        row += ',';
        row += std::to_string(r.baseline);
        row += ',';
        append_fixed(row, r.mean, 4);
        row += ',';
        row += std::to_string(r.worst);
        row += ',';
        row += std::to_string(r.best);
        row += ',';
        append_fixed(row, r.difference, 4);
        row += ',';
        append_fixed(row, r.stddev, 4);
        row += ',';
        if (include_times) {
            append_fixed(row, r.time_secs, 4);
            row += ',';
        }
        append_fixed(row, r.t_stat, 4);
        row += ',';
        append_p_value(row, r.p_value);
        row += ',';
        row += to_string(r.mark);
        row += '\n';
        out << row;
    }
}

void write_runs_csv(std::ostream& out, const std::vector<TrialRecord>& records,
                    bool include_times) {
    out << (include_times
                ? "instance,algorithm,baseline,run,seed,cost,iterations,time_to_best_secs\n"
                : "instance,algorithm,baseline,run,seed,cost,iterations\n");
    for (const TrialRecord& r : records) {
        if (r.failed()) continue;
        for (const RunOutcome& run : r.runs) {
            std::string row = r.instance_id;
            row += ',';
            row += r.algorithm;
            row += ',';
            row += std::to_string(r.baseline);
            row += ',';
            row += std::to_string(run.run);
            row += ',';
            row += std::to_string(run.seed);
            row += ',';
            row += std::to_string(run.cost);
            row += ',';
            row += std::to_string(run.iterations);
            if (include_times) {
                row += ',';
                append_exact(row, run.time_to_best_secs);
            }
            row += '\n';
            out << row;
        }
    }
}

std::vector<TrialRecord> read_runs_csv(std::istream& in, double significance) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("runs csv: missing header");
    bool with_times = false;
    if (line == "instance,algorithm,baseline,run,seed,cost,iterations,time_to_best_secs") {
        with_times = true;
    } else if (line != "instance,algorithm,baseline,run,seed,cost,iterations") {
        throw std::runtime_error("runs csv: unrecognized header: " + line);
    }

    std::vector<TrialRecord> records;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::vector<std::string> f = split_csv_row(line);
        const std::size_t expected = with_times ? 8 : 7;
        if (f.size() != expected) csv_error(line_no, "expected " + std::to_string(expected) + " fields");
        RunOutcome run;
        int baseline = 0;
        try {
            baseline = std::stoi(f[2]);
            run.run = std::stoi(f[3]);
            run.seed = std::stoull(f[4]);
            run.cost = std::stoi(f[5]);
            run.iterations = std::stoi(f[6]);
            if (with_times) run.time_to_best_secs = std::stod(f[7]);
        } catch (const std::exception&) {
            csv_error(line_no, "unparsable numeric field");
        }
        if (records.empty() || records.back().instance_id != f[0] ||
            records.back().algorithm != f[1]) {
            records.push_back({.instance_id = f[0], .algorithm = f[1], .baseline = baseline});
        } else if (records.back().baseline != baseline) {
            csv_error(line_no, "baseline changed within one trial");
        }
        records.back().runs.push_back(run);
    }
    for (TrialRecord& r : records) aggregate(r, significance);
    return records;
}

void write_cost_series(std::ostream& out, const std::vector<TrialRecord>& records,
                       std::string_view algorithm) {
    out << "# index mean_cost instance\n";
    int index = 0;
    for (const TrialRecord& r : records) {
        if (r.failed() || r.algorithm != algorithm) continue;
        std::string row = std::to_string(index++);
        row += ' ';
        append_fixed(row, r.mean, 4);
        row += ' ';
        row += r.instance_id;
        row += '\n';
        out << row;
    }
}

}  // namespace mcsp
