#include <benchmark/benchmark.h>

#include "qgrass/enumerate.hpp"
#include "qgrass/families.hpp"

using namespace qgrass;

static void BM_grassmannian_parallel(benchmark::State& state) {
    Ambient amb(2, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(grassmannian_count(amb, 3));
}
BENCHMARK(BM_grassmannian_parallel)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_grassmannian_serial(benchmark::State& state) {
    Ambient amb(2, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(grassmannian_count_serial(amb, 3));
}
BENCHMARK(BM_grassmannian_serial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_type_count_parallel(benchmark::State& state) {
    Ambient amb(2, static_cast<int>(state.range(0)));
    Subspace l = coordinate_subspace(amb, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(type_count(l, 3, 1));
}
BENCHMARK(BM_type_count_parallel)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_type_count_serial(benchmark::State& state) {
    Ambient amb(2, static_cast<int>(state.range(0)));
    Subspace l = coordinate_subspace(amb, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(type_count_serial(l, 3, 1));
}
BENCHMARK(BM_type_count_serial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

namespace {

// built once; both pair benchmarks measure only the predicate sweep
const Ambient kAmb(2, 6);
const Subspace kL = coordinate_subspace(kAmb, 2);
const Family kF = build_h1(Subspace::full(kAmb), kL, 3);
const Family kG = build_m(kL, 3, 1);

} // namespace

static void BM_pair_predicate_parallel(benchmark::State& state) {
    for (auto _ : state) {
        PairStats st = pair_predicate(kF, kG, 1, 0);
        benchmark::DoNotOptimize(st);
    }
}
BENCHMARK(BM_pair_predicate_parallel)->Unit(benchmark::kMillisecond);

static void BM_pair_predicate_serial(benchmark::State& state) {
    for (auto _ : state) {
        PairStats st = pair_predicate_serial(kF, kG, 1, 0);
        benchmark::DoNotOptimize(st);
    }
}
BENCHMARK(BM_pair_predicate_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
