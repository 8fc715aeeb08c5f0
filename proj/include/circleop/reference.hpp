#pragma once

#include "circleop/oscillation.hpp"

namespace circleop::reference {

/// Serial direct-quadrature and kernel-quadrature implementations kept as the
/// independent route for testing the production paths. None of these share
/// code with the FFT or windowed-sweep implementations they check.

/// a(n) = (1/G) sum_j f_j e^{-i n theta_j} by plain summation with
/// std::polar twiddles.
FourierSeries coefficients_direct(const GridFunction& f, int degree);

/// f_j = sum_n a(n) e^{i n theta_j} by plain summation.
GridFunction evaluate_direct(const FourierSeries& s, const CircleGrid& grid);

/// Poisson transform by direct quadrature of the kernel
/// Re[(e^{it} + z)/(e^{it} - z)] at z = r e^{i theta}.
GridFunction poisson_kernel_quadrature(const GridFunction& w, double radius);

/// Conjugation at radius r by direct quadrature of the kernel
/// -Im[(e^{it} + z)/(e^{it} - z)], the orientation under which the
/// conjugation operator equals minus the Hilbert transform.
GridFunction conjugation_kernel_quadrature(const GridFunction& w, double radius);

/// Fejer mean by direct circular convolution with the sampled Fejer kernel.
GridFunction fejer_kernel_quadrature(const GridFunction& f, int order);

/// Winding number of the raw (unsmoothed) sample curve by argument
/// accumulation; the brute-force oracle for smooth symbols.
double winding_raw(const GridFunction& f);

/// (1/(2|I|^2)) int_I int_I |f(t) - f(x)|^2 dx dt by the double sum.
double mean_oscillation_double_integral(const GridFunction& f, const Arc& I);

}  // namespace circleop::reference
