#include <benchmark/benchmark.h>

#include <vector>

#include "sfgft/eigensolver.hpp"
#include "sfgft/gft.hpp"
#include "sfgft/graph.hpp"
#include "sfgft/interp.hpp"
#include "sfgft/rng.hpp"
#include "sfgft/sensor.hpp"
#include "sfgft/svd.hpp"

using namespace sfgft;

namespace {

Matrix random_spd(int n, std::uint64_t seed) {
    Rng rng(seed);
    Matrix b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = rng.uniform(-1.0, 1.0);
    Matrix a = multiply_at_b(b, b);
    for (int i = 0; i < n; ++i) a(i, i) += 1.0;
    return a;
}

}  // namespace

static void BM_KnnGraph(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto field = place_sensors(n, 1);
    for (auto _ : state) benchmark::DoNotOptimize(build_knn_graph(field.positions, 8, 0.3));
}
BENCHMARK(BM_KnnGraph)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_SymEig(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto field = place_sensors(n, 1);
    const Matrix lap = laplacian(build_knn_graph(field.positions, 8, 0.3));
    for (auto _ : state) benchmark::DoNotOptimize(sym_eig(lap));
}
BENCHMARK(BM_SymEig)->Arg(100)->Arg(300)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_GeneralizedEig(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto field = place_sensors(n, 1);
    const Graph g = build_knn_graph(field.positions, 8, 0.3);
    const Matrix lap = laplacian(g);
    const auto degrees = degree_table(g);
    Matrix d(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = degrees[static_cast<size_t>(i)];
    for (auto _ : state) benchmark::DoNotOptimize(generalized_sym_eig(lap, d));
}
BENCHMARK(BM_GeneralizedEig)->Arg(100)->Arg(300)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_BuildGft(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto field = place_sensors(n, 1);
    const Graph g = build_knn_graph(field.positions, 8, 0.3);
    const auto p = sample_random(n, n / 5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(build_gft(g, p));
}
BENCHMARK(BM_BuildGft)->Arg(100)->Arg(300)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_Interpolate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto field = place_sensors(n, 1);
    const Graph g = build_knn_graph(field.positions, 8, 0.3);
    const auto gft = build_gft(g, sample_random(n, n / 5, 2));
    const auto xs = sample_signal(gft.partition(), eval_signal(field, 1.0));
    for (auto _ : state) benchmark::DoNotOptimize(interpolate_sf(gft, xs));
}
BENCHMARK(BM_Interpolate)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

static void BM_JacobiSvd(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix a = random_spd(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_svd(a));
}
BENCHMARK(BM_JacobiSvd)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_ForwardTransform(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto field = place_sensors(n, 1);
    const Graph g = build_knn_graph(field.positions, 8, 0.3);
    const auto gft = build_gft(g, sample_random(n, n / 5, 2));
    const auto x = eval_signal(field, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(forward(gft, x));
}
BENCHMARK(BM_ForwardTransform)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
