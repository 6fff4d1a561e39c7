#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "hcs/exponent.hpp"
#include "hcs/hns.hpp"
#include "hcs/spectral.hpp"

namespace {

hcs::HyperNum sample(std::size_t n, std::uint64_t seed) {
    auto sys = hcs::cyclic_group_algebra(n);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> c(n);
    for (double& v : c) v = dist(rng);
    return hcs::HyperNum(sys, std::move(c));
}

void BM_Multiply(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto a = sample(n, 1), b = sample(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(hcs::multiply(a, b));
}
BENCHMARK(BM_Multiply)->Arg(4)->Arg(5)->Arg(8)->Arg(16);

void BM_AssocMatrix(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto m = sample(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(hcs::assoc_matrix(m));
}
BENCHMARK(BM_AssocMatrix)->Arg(5)->Arg(16);

void BM_Spectrum(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto m = sample(n, 4);
    for (auto _ : state) benchmark::DoNotOptimize(hcs::spectrum(m));
}
BENCHMARK(BM_Spectrum)->Arg(4)->Arg(5)->Arg(8)->Arg(16);

void BM_ExpSeries(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto m = sample(n, 5);
    for (auto _ : state) benchmark::DoNotOptimize(hcs::exp_series(m));
}
BENCHMARK(BM_ExpSeries)->Arg(4)->Arg(5)->Arg(8);

void BM_ExpMatrix(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto m = sample(n, 5);
    for (auto _ : state) benchmark::DoNotOptimize(hcs::exp_matrix(m));
}
BENCHMARK(BM_ExpMatrix)->Arg(4)->Arg(5)->Arg(8);

void BM_ExpEigen(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto m = sample(n, 5);
    for (auto _ : state) benchmark::DoNotOptimize(hcs::exp_eigen(m));
}
BENCHMARK(BM_ExpEigen)->Arg(4)->Arg(5)->Arg(8);

void BM_ExpClosedG47(benchmark::State& state) {
    auto m = sample(4, 5);
    for (auto _ : state) benchmark::DoNotOptimize(hcs::exp_closed_g47(m));
}
BENCHMARK(BM_ExpClosedG47);

void BM_ExpClosedG51(benchmark::State& state) {
    auto m = sample(5, 5);
    for (auto _ : state) benchmark::DoNotOptimize(hcs::exp_closed_g51(m));
}
BENCHMARK(BM_ExpClosedG51);

void BM_ExpDft(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto m = sample(n, 5);
    for (auto _ : state) benchmark::DoNotOptimize(hcs::exp_cyclic_dft(m));
}
BENCHMARK(BM_ExpDft)->Arg(4)->Arg(5)->Arg(8)->Arg(16);

void BM_Crosscheck(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto m = sample(n, 6);
    for (auto _ : state) benchmark::DoNotOptimize(hcs::crosscheck_exp(m));
}
BENCHMARK(BM_Crosscheck)->Arg(4)->Arg(5);

} // namespace

BENCHMARK_MAIN();
