// Compares the OpenMP grid scans against their serial reference
// implementations on a large sampling grid.

#include <benchmark/benchmark.h>

#include "toda/herglotz.hpp"

namespace {

using namespace toda;

const PolyQ kZ = PolyQ::monomial(Rational(1), 1);

Factorization make_tm() {
    Factorization f;
    f.factors.emplace_back(PolyQ::monomial(Rational(2), 1), Projection(1, 0));
    f.factors.emplace_back(PolyQ::monomial(Rational(1, 3), 1), Projection(0, 1));
    f.factors.emplace_back(PolyQ::monomial(Rational(5, 2), 1), Projection(1, -1));
    f.factors.emplace_back(PolyQ::monomial(Rational(3), 1), Projection(2, 1));
    return f;
}

SampleGrid large_grid(int64_t n) {
    return SampleGrid{-50.0, 50.0, static_cast<int>(n), 1e-4, 1e4, static_cast<int>(n)};
}

void bm_hp_parallel(benchmark::State& state) {
    PolyMat a = expand(make_tm());
    SampleGrid grid = large_grid(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hp_min_eigen_sample(a, grid));
}

void bm_hp_serial(benchmark::State& state) {
    PolyMat a = expand(make_tm());
    SampleGrid grid = large_grid(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hp_min_eigen_sample_serial(a, grid));
}

void bm_herglotz_parallel(benchmark::State& state) {
    RatFunc f = herglotz_generate(make_tm(), ExtendedReal::finite(Rational(1, 2)));
    SampleGrid grid = large_grid(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(herglotz_check(f, grid));
}

void bm_herglotz_serial(benchmark::State& state) {
    RatFunc f = herglotz_generate(make_tm(), ExtendedReal::finite(Rational(1, 2)));
    SampleGrid grid = large_grid(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(herglotz_check_serial(f, grid));
}

}  // namespace

BENCHMARK(bm_hp_parallel)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(bm_hp_serial)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(bm_herglotz_parallel)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(bm_herglotz_serial)->Arg(64)->Arg(256)->Arg(512);

BENCHMARK_MAIN();
