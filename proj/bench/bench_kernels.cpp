#include <benchmark/benchmark.h>

#include <random>

#include "superdq/moyal.hpp"
#include "superdq/quantization.hpp"

using namespace superdq;

static Grid2 random_gaussian(int N, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> nd;
  double c0 = 0.5 * nd(rng), c1 = 0.5 * nd(rng);
  Grid2 g = Grid2::centered(N, 6.0);
  g.fill([&](double x, double y) { return cplx(std::exp(-(x - c0) * (x - c0) - (y - c1) * (y - c1))); });
  return g;
}

static void BM_MoyalFFT(benchmark::State& st) {
  int N = int(st.range(0));
  Grid2 f = random_gaussian(N, 1), g = random_gaussian(N, 2);
  for (auto _ : st) benchmark::DoNotOptimize(moyal_grid(f, g, 1.0));
}
BENCHMARK(BM_MoyalFFT)->Arg(8)->Arg(16)->Arg(64)->Arg(256);

static void BM_MoyalSerial(benchmark::State& st) {
  int N = int(st.range(0));
  Grid2 f = random_gaussian(N, 1), g = random_gaussian(N, 2);
  for (auto _ : st) benchmark::DoNotOptimize(moyal_grid_serial(f, g, 1.0));
}
BENCHMARK(BM_MoyalSerial)->Arg(8)->Arg(16);

static GridModel model(int N, int n) {
  GridModel g;
  g.N = N;
  g.n = n;
  g.L = 6;
  return g;
}

static GridSuperFunction symbol(const GridModel& g) {
  auto f = g.zero_symbol();
  for (auto& c : f.comp) c.fill([](double x, double w) { return cplx(std::exp(-x * x - w * w)); });
  return f;
}

static void BM_OmegaFFT(benchmark::State& st) {
  auto g = model(int(st.range(0)), 1);
  auto f = symbol(g);
  for (auto _ : st) benchmark::DoNotOptimize(omega_fn(f, g));
}
BENCHMARK(BM_OmegaFFT)->Arg(16)->Arg(32)->Arg(64);

static void BM_OmegaSerial(benchmark::State& st) {
  auto g = model(int(st.range(0)), 1);
  auto f = symbol(g);
  for (auto _ : st) benchmark::DoNotOptimize(omega_fn_serial(f, g));
}
BENCHMARK(BM_OmegaSerial)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
