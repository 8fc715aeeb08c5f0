#pragma once

#include <complex>
#include <span>

namespace circleop::fft {

using cplx = std::complex<double>;

/// out[k] = sum_j in[j] * e^{-2 pi i j k / N}. Power-of-two N only.
void forward(std::span<const cplx> in, std::span<cplx> out);

/// out[j] = sum_k in[k] * e^{+2 pi i j k / N} (no 1/N factor).
void inverse_unscaled(std::span<const cplx> in, std::span<cplx> out);

}  // namespace circleop::fft
