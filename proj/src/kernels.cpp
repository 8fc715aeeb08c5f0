#include "circleop/kernels.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace circleop::kernels {

namespace {

// e^{-2 pi i m / n} for m = 0..n-1; exact index arithmetic keeps the direct
// sums free of large-argument trig reduction.
std::vector<cplx> twiddles(int n) {
  std::vector<cplx> t(n);
  for (int m = 0; m < n; ++m)
    t[m] = std::polar(1.0, -2.0 * std::numbers::pi * m / n);
  return t;
}

}  // namespace

void dft_analyze(std::span<const cplx> samples, int degree, std::span<cplx> out,
                 Exec exec) {
  const int g = static_cast<int>(samples.size());
  const std::vector<cplx> t = twiddles(g);
  const bool par = exec == Exec::Parallel;

#pragma omp parallel for schedule(static) if (par)
  for (int m = 0; m < 2 * degree + 1; ++m) {
    const long long n = m - degree;
    cplx acc(0.0, 0.0);
    for (int j = 0; j < g; ++j) {
      long long idx = (n * j) % g;
      if (idx < 0) idx += g;
      acc += samples[j] * t[static_cast<size_t>(idx)];
    }
    out[m] = acc / static_cast<double>(g);
  }
}

void dft_synthesize(std::span<const cplx> coeffs, int degree, int grid_size,
                    std::span<cplx> out, Exec exec) {
  const std::vector<cplx> t = twiddles(grid_size);
  const bool par = exec == Exec::Parallel;

#pragma omp parallel for schedule(static) if (par)
  for (int j = 0; j < grid_size; ++j) {
    cplx acc(0.0, 0.0);
    for (int m = 0; m < 2 * degree + 1; ++m) {
      const long long n = m - degree;
      long long idx = (-n * j) % grid_size;  // conj of the analysis twiddle
      if (idx < 0) idx += grid_size;
      acc += coeffs[m] * t[static_cast<size_t>(idx)];
    }
    out[j] = acc;
  }
}

double window_oscillation(std::span<const cplx> values, int start, int len) {
  const int g = static_cast<int>(values.size());
  cplx sum(0.0, 0.0);
  for (int i = 0; i < len; ++i) sum += values[(start + i) % g];
  const cplx mean = sum / static_cast<double>(len);
  double dev = 0.0;
  for (int i = 0; i < len; ++i) dev += std::norm(values[(start + i) % g] - mean);
  return std::sqrt(dev / len);
}

double worst_window_oscillation(std::span<const cplx> values, int window_len,
                                int n_windows, int window_stride, Exec exec) {
  const bool par = exec == Exec::Parallel;
  double worst = 0.0;

#pragma omp parallel for schedule(static) reduction(max : worst) if (par)
  for (int w = 0; w < n_windows; ++w)
    worst = std::max(worst, window_oscillation(values, w * window_stride, window_len));

  return worst;
}

}  // namespace circleop::kernels
