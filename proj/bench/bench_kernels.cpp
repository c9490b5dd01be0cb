// Serial references against the OpenMP kernels on the same inputs.
#include <benchmark/benchmark.h>

#include "geodex/game.hpp"
#include "geodex/generators.hpp"

using namespace geodex;

namespace {

Graph sparse(int n) {
    Rng rng(n);
    return random_connected_graph(n, 4.0 / n, rng);
}

void BM_distances_serial(benchmark::State& st) {
    Graph g = sparse(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(serial::all_pairs_distances(g));
}

void BM_distances_omp(benchmark::State& st) {
    Graph g = sparse(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(all_pairs_distances(g));
}

void BM_intervals_serial(benchmark::State& st) {
    Graph g = sparse(static_cast<int>(st.range(0)));
    DistanceMatrix dm = serial::all_pairs_distances(g);
    for (auto _ : st) benchmark::DoNotOptimize(serial::build_intervals(g, dm));
}

void BM_intervals_omp(benchmark::State& st) {
    Graph g = sparse(static_cast<int>(st.range(0)));
    DistanceMatrix dm = all_pairs_distances(g);
    for (auto _ : st) benchmark::DoNotOptimize(build_intervals(g, dm));
}

void BM_grundy_serial(benchmark::State& st) {
    Graph g = grid_graph({3, static_cast<int>(st.range(0))});
    for (auto _ : st) benchmark::DoNotOptimize(serial::grundy(g, {}));
}

void BM_grundy_omp(benchmark::State& st) {
    Graph g = grid_graph({3, static_cast<int>(st.range(0))});
    for (auto _ : st) benchmark::DoNotOptimize(GameEngine(g).grundy({}));
}

}  // namespace

BENCHMARK(BM_distances_serial)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_distances_omp)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_intervals_serial)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_intervals_omp)->Arg(32)->Arg(64)->Arg(128);
BENCHMARK(BM_grundy_serial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_grundy_omp)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
