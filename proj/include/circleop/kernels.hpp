#pragma once

#include <complex>
#include <span>

namespace circleop {

/// Execution policy for the data-parallel kernels. Parallel runs split work
/// across OpenMP threads over independent output elements only, so Serial and
/// Parallel produce bitwise-identical results.
enum class Exec { Serial, Parallel };

namespace kernels {

using cplx = std::complex<double>;

/// Direct quadrature of the coefficient integral on a uniform grid:
/// out[n + degree] = (1/G) * sum_j samples[j] * e^{-i n theta_j}.
/// Twiddles come from a shared table of G roots of unity, so results do not
/// depend on the execution policy.
void dft_analyze(std::span<const cplx> samples, int degree, std::span<cplx> out,
                 Exec exec);

/// Direct synthesis out[j] = sum_n coeffs[n + degree] * e^{+i n theta_j} on the
/// uniform grid of size grid_size.
void dft_synthesize(std::span<const cplx> coeffs, int degree, int grid_size,
                    std::span<cplx> out, Exec exec);

/// Worst (largest) rooted mean oscillation over a family of circular windows
/// of window_len points whose starts are window_stride apart. Each window is
/// evaluated with a two-pass mean / mean-square-deviation sweep; the max
/// reduction is exact, so the result is independent of the policy.
double worst_window_oscillation(std::span<const cplx> values, int window_len,
                                int n_windows, int window_stride, Exec exec);

/// Rooted mean oscillation of one circular window (two-pass).
double window_oscillation(std::span<const cplx> values, int start, int len);

}  // namespace kernels
}  // namespace circleop
