// Serial reference vs OpenMP kernels on the workloads the experiments run.

#include "pqszasz/sequences.hpp"
#include "pqszasz/smoothness.hpp"
#include "pqszasz/szasz_operator.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

using namespace pqszasz;

namespace {

std::vector<double> grid_points(double hi, std::size_t count)
{
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i)
    xs[i] = hi * static_cast<double>(i) / static_cast<double>(count - 1);
  return xs;
}

const RealFunction kSin = [](double t) { return std::sin(t); };

void BM_ApplyGridSerial(benchmark::State& state)
{
  const auto n = static_cast<std::size_t>(state.range(0));
  const PQParams pq = SequenceParams(1.0, 0.5).at(n);
  const auto xs = grid_points(5.0, 256);
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::apply_grid(kSin, n, pq, xs));
}

void BM_ApplyGridParallel(benchmark::State& state)
{
  const auto n = static_cast<std::size_t>(state.range(0));
  const PQParams pq = SequenceParams(1.0, 0.5).at(n);
  const auto xs = grid_points(5.0, 256);
  for (auto _ : state)
    benchmark::DoNotOptimize(apply_grid(kSin, n, pq, xs));
}

void BM_Modulus2Serial(benchmark::State& state)
{
  const GridSpec grid(50.0, static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::modulus2(kSin, 0.3, grid));
}

void BM_Modulus2Parallel(benchmark::State& state)
{
  const GridSpec grid(50.0, static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state)
    benchmark::DoNotOptimize(modulus2(kSin, 0.3, grid));
}

void BM_WeightedModulusSerial(benchmark::State& state)
{
  const GridSpec grid(50.0, static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::weighted_modulus(kSin, 1.5, grid));
}

void BM_WeightedModulusParallel(benchmark::State& state)
{
  const GridSpec grid(50.0, static_cast<std::size_t>(state.range(0)), 200);
  for (auto _ : state)
    benchmark::DoNotOptimize(weighted_modulus(kSin, 1.5, grid));
}

} // namespace

BENCHMARK(BM_ApplyGridSerial)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApplyGridParallel)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Modulus2Serial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Modulus2Parallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightedModulusSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightedModulusParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
