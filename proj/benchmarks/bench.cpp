#include <benchmark/benchmark.h>

#include <cyclolat/bounds.hpp>
#include <cyclolat/embedding.hpp>
#include <cyclolat/lattice.hpp>
#include <cyclolat/numtheory.hpp>

namespace {

void bench_lemma2_sum(benchmark::State& state) {
    const auto m = static_cast<std::int64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cyclolat::lemma2_sum(m));
}
BENCHMARK(bench_lemma2_sum)->Arg(1'000)->Arg(100'000);

void bench_bound_report(benchmark::State& state) {
    const auto n = static_cast<std::int64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(cyclolat::make_bound_report(cyclolat::make_modulus(n)));
}
BENCHMARK(bench_bound_report)->Arg(15)->Arg(9'973);

void bench_unit_basis(benchmark::State& state) {
    const auto n = static_cast<std::int64_t>(state.range(0));
    const cyclolat::Modulus mod = cyclolat::make_modulus(n);
    for (auto _ : state) benchmark::DoNotOptimize(cyclolat::ramachandra_basis(mod));
}
BENCHMARK(bench_unit_basis)->Arg(15)->Arg(32);

void bench_lll_reduce(benchmark::State& state) {
    const cyclolat::LatticeBasis basis =
        cyclolat::ramachandra_basis(cyclolat::make_modulus(13));
    for (auto _ : state) benchmark::DoNotOptimize(cyclolat::lll_reduce(basis));
}
BENCHMARK(bench_lll_reduce);

void bench_shortest_vector(benchmark::State& state) {
    const cyclolat::LatticeBasis basis =
        cyclolat::ramachandra_basis(cyclolat::make_modulus(13));
    for (auto _ : state) benchmark::DoNotOptimize(cyclolat::shortest_vector(basis));
}
BENCHMARK(bench_shortest_vector);

void bench_covering_radius_exact(benchmark::State& state) {
    const cyclolat::LatticeBasis basis = cyclolat::ramachandra_basis(
        cyclolat::make_modulus(static_cast<std::int64_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(cyclolat::covering_radius_exact(basis));
}
BENCHMARK(bench_covering_radius_exact)->Arg(16)->Arg(11);

}  // namespace

BENCHMARK_MAIN();
