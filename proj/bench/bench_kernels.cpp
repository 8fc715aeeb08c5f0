#include <benchmark/benchmark.h>

#include <random>

#include "circleop/fft.hpp"
#include "circleop/toeplitz.hpp"

// Serial reference vs OpenMP kernels vs the FFT fast path.

namespace {

using namespace circleop;

GridFunction random_samples(int grid_size, int degree) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FourierSeries s = FourierSeries::zero(degree);
  for (int n = -degree; n <= degree; ++n) s.at(n) = cplx(u(rng), u(rng));
  return evaluate(s, CircleGrid(grid_size));
}

void bm_dft_analyze(benchmark::State& state, Exec exec) {
  const int g = static_cast<int>(state.range(0));
  const int degree = g / 4;
  const GridFunction f = random_samples(g, 16);
  std::vector<cplx> out(2 * degree + 1);
  for (auto _ : state) {
    kernels::dft_analyze(f.values, degree, out, exec);
    benchmark::DoNotOptimize(out.data());
  }
}

void bm_fft_analyze(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const GridFunction f = random_samples(g, 16);
  std::vector<cplx> out(g);
  for (auto _ : state) {
    fft::forward(f.values, out);
    benchmark::DoNotOptimize(out.data());
  }
}

void bm_oscillation_sweep(benchmark::State& state, Exec exec) {
  const int g = static_cast<int>(state.range(0));
  const GridFunction f = random_samples(g, 64);
  for (auto _ : state) {
    const OscillationProfile p = bmo_profile(f, default_profile_depth(f.grid), exec);
    benchmark::DoNotOptimize(p.levels.data());
  }
}

void bm_toeplitz_fill(benchmark::State& state, Exec exec) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  FourierSeries s = FourierSeries::zero(32);
  for (int n = -32; n <= 32; ++n) s.at(n) = cplx(u(rng), u(rng));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const FiniteToeplitz sec = finite_section(s, n, exec);
    benchmark::DoNotOptimize(sec.entries.data());
  }
}

}  // namespace

BENCHMARK_CAPTURE(bm_dft_analyze, serial, Exec::Serial)->Arg(1 << 10)->Arg(1 << 12);
BENCHMARK_CAPTURE(bm_dft_analyze, openmp, Exec::Parallel)->Arg(1 << 10)->Arg(1 << 12);
BENCHMARK(bm_fft_analyze)->Arg(1 << 10)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK_CAPTURE(bm_oscillation_sweep, serial, Exec::Serial)->Arg(1 << 14)->Arg(1 << 16);
BENCHMARK_CAPTURE(bm_oscillation_sweep, openmp, Exec::Parallel)->Arg(1 << 14)->Arg(1 << 16);
BENCHMARK_CAPTURE(bm_toeplitz_fill, serial, Exec::Serial)->Arg(256)->Arg(1024);
BENCHMARK_CAPTURE(bm_toeplitz_fill, openmp, Exec::Parallel)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
