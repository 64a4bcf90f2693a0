#include <benchmark/benchmark.h>

#include "mcsp/csgraph.hpp"
#include "mcsp/exact.hpp"
#include "mcsp/greedy.hpp"
#include "mcsp/instances.hpp"
#include "mcsp/mmas.hpp"
#include "mcsp/rng.hpp"

namespace {

void BM_graph_build(benchmark::State& state) {
    const mcsp::Instance inst =
        mcsp::generate_instance("bench", static_cast<int>(state.range(0)), 1);
    for (auto _ : state) {
        const mcsp::CommonSubstringGraph g(inst.x, inst.y);
        benchmark::DoNotOptimize(g.edge_count());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_graph_build)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Complexity();

void BM_greedy(benchmark::State& state) {
    const mcsp::Instance inst =
        mcsp::generate_instance("bench", static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mcsp::greedy_mcsp(inst.x, inst.y).size());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_greedy)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Complexity();

void BM_construct_solution(benchmark::State& state) {
    const mcsp::Instance inst =
        mcsp::generate_instance("bench", static_cast<int>(state.range(0)), 3);
    const mcsp::CommonSubstringGraph g(inst.x, inst.y);
    mcsp::MmasParams params;
    const mcsp::PheromoneTable trail(static_cast<std::size_t>(g.edge_count()),
                                     params.init_pheromone);
    mcsp::Rng rng(17);
    int ant = 0;
    for (auto _ : state) {
        const mcsp::Solution s = mcsp::construct_solution(g, trail, params, ant, rng);
        benchmark::DoNotOptimize(s.cost);
        ant = (ant + 1) % params.n_ants;
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_construct_solution)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Complexity();

void BM_solve_small(benchmark::State& state) {
    const mcsp::Instance inst = mcsp::generate_instance("bench", 40, 4);
    mcsp::MmasParams params;
    params.n_ants = 20;
    params.max_iterations = 10;
    params.max_stale_iters = 1000;
    params.max_time_secs = 0.0;
    params.seed = 5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mcsp::solve(inst.x, inst.y, params).best.cost);
    }
}
BENCHMARK(BM_solve_small);

void BM_exact_search(benchmark::State& state) {
    mcsp::Rng rng(6);
    std::string x(12, 'a');
    for (char& c : x) c = static_cast<char>('a' + rng.below(3));
    std::string y = x;
    rng.shuffle(y);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mcsp::exact_mcsp(x, y).cost);
    }
}
BENCHMARK(BM_exact_search);

}  // namespace

BENCHMARK_MAIN();
