#include <benchmark/benchmark.h>

#include "covsys/covsys.hpp"

using namespace covsys;

static void BM_CoverageSieve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto sharp = build_sharp_system(n, Poly(Field::prime(2)));
  for (auto _ : state) benchmark::DoNotOptimize(coverage_below(sharp.system, n));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_CoverageSieve)->DenseRange(8, 16, 4);

// Same question answered one polynomial at a time.
static void BM_CoveragePointwise(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Field f2 = Field::prime(2);
  const auto sharp = build_sharp_system(n, Poly(f2));
  for (auto _ : state) {
    std::uint64_t covered = 0;
    for (const Poly& g : enumerate_degree_below(f2, n)) covered += covers_point(sharp.system, g);
    benchmark::DoNotOptimize(covered);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_CoveragePointwise)->DenseRange(8, 16, 4);

static void BM_ExactCoverage(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto sharp = build_sharp_system(n, Poly(Field::prime(2)));
  for (auto _ : state) benchmark::DoNotOptimize(covers_everything_exact(sharp.system));
}
BENCHMARK(BM_ExactCoverage)->DenseRange(8, 16, 4);

static void BM_SharpBuild(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Poly target = Poly::x(Field::prime(2));
  for (auto _ : state) benchmark::DoNotOptimize(build_sharp_system(n, target));
}
BENCHMARK(BM_SharpBuild)->DenseRange(6, 12, 3)->Unit(benchmark::kMillisecond);

static void BM_VerifyTheorem(benchmark::State& state) {
  const Field f2 = Field::prime(2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(f2, 3, static_cast<std::size_t>(state.range(0)), BigInt(1) << 30));
}
BENCHMARK(BM_VerifyTheorem)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
