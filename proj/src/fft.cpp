#include "circleop/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

#include "circleop/grid.hpp"

namespace circleop::fft {

namespace {

// One forward and one backward plan per transform size. Plans are created
// with FFTW_UNALIGNED so they may execute on any caller buffers.
struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

std::mutex plan_mutex;
std::map<int, PlanPair>& plan_cache() {
  static std::map<int, PlanPair> cache;
  return cache;
}

PlanPair plans_for(int n) {
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto& cache = plan_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<cplx> a(n), b(n);
  PlanPair p;
  p.fwd = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                           reinterpret_cast<fftw_complex*>(b.data()),
                           FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                           reinterpret_cast<fftw_complex*>(b.data()),
                           FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  cache[n] = p;
  return p;
}

}  // namespace

void forward(std::span<const cplx> in, std::span<cplx> out) {
  const int n = static_cast<int>(in.size());
  if (!is_power_of_two(n) || out.size() != in.size())
    throw validation_error("circle_fourier", "fft requires matching power-of-two buffers");
  PlanPair p = plans_for(n);
  fftw_execute_dft(p.fwd,
                   reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

void inverse_unscaled(std::span<const cplx> in, std::span<cplx> out) {
  const int n = static_cast<int>(in.size());
  if (!is_power_of_two(n) || out.size() != in.size())
    throw validation_error("circle_fourier", "fft requires matching power-of-two buffers");
  PlanPair p = plans_for(n);
  fftw_execute_dft(p.bwd,
                   reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace circleop::fft
