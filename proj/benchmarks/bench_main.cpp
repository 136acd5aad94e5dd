#include <modchar/pipeline.hpp>
#include <modchar/tiltingdata.hpp>
#include <modchar/weylchar.hpp>

#include <benchmark/benchmark.h>

using namespace modchar;

namespace {

void BM_weyl_character_a2(benchmark::State& state) {
    auto rs = RootSystem::build('A', 2);
    long long k = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(weyl_character(rs, k * rs.rho()));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_weyl_character_a2)->Arg(4)->Arg(8)->Arg(16)->Complexity();

void BM_weyl_character_g2(benchmark::State& state) {
    auto rs = RootSystem::build('G', 2);
    long long k = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(weyl_character(rs, k * rs.rho()));
}
BENCHMARK(BM_weyl_character_g2)->Arg(2)->Arg(4)->Arg(8);

void BM_character_multiply(benchmark::State& state) {
    auto rs = RootSystem::build('B', 2);
    Character x = weyl_character(rs, Weight{static_cast<long long>(state.range(0)), 2});
    for (auto _ : state) benchmark::DoNotOptimize(multiply(x, x));
}
BENCHMARK(BM_character_multiply)->Arg(2)->Arg(4)->Arg(6);

void BM_extract(benchmark::State& state) {
    auto rs = RootSystem::build('B', 2);
    WeylCharacterCache cache(rs);
    long long p = 3;
    int r = static_cast<int>(state.range(0));
    Character x;
    for (long long i = 0; i < 4; ++i)
        x = add(x, baby_verma_character(cache, p, r, Weight{2 * i, 3 - i}));
    for (auto _ : state)
        benchmark::DoNotOptimize(extract_baby_verma_multiplicities(cache, p, r, x));
}
BENCHMARK(BM_extract)->Arg(1)->Arg(2);

void BM_sl2_pipeline(benchmark::State& state) {
    auto rs = RootSystem::build('A', 1);
    long long p = state.range(0);
    auto ds = TiltingDataset::generate_sl2(p, 2 * p - 2);
    for (auto _ : state) {
        PipelineConfig cfg(rs, p);
        auto table = build_table(cfg, ds);
        benchmark::DoNotOptimize(simple_characters(table, cfg));
    }
}
BENCHMARK(BM_sl2_pipeline)->Arg(2)->Arg(7)->Arg(13);

}  // namespace

BENCHMARK_MAIN();
