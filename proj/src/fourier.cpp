#include "circleop/fourier.hpp"

#include <algorithm>
#include <cmath>

#include "circleop/fft.hpp"

namespace circleop {

namespace {

// Below this grid size the direct OpenMP kernel wins over transform setup.
constexpr int kFftThreshold = 512;

}  // namespace

bool FourierSeries::real_symmetric(double tol) const {
  const double scale = std::max(1.0, max_coeff_abs());
  for (int n = 0; n <= degree; ++n)
    if (std::abs(at(-n) - std::conj(at(n))) > tol * scale) return false;
  return true;
}

double FourierSeries::l2_norm_sq() const {
  double s = 0.0;
  for (const cplx& c : coeffs) s += std::norm(c);
  return s;
}

double FourierSeries::max_coeff_abs() const {
  double m = 0.0;
  for (const cplx& c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

FourierSeries FourierSeries::resized(int M) const {
  FourierSeries out = zero(M);
  const int lim = std::min(M, degree);
  for (int n = -lim; n <= lim; ++n) out.at(n) = at(n);
  return out;
}

FourierSeries operator+(const FourierSeries& a, const FourierSeries& b) {
  const int N = std::max(a.degree, b.degree);
  FourierSeries out = FourierSeries::zero(N);
  for (int n = -N; n <= N; ++n) out.at(n) = a.at_or_zero(n) + b.at_or_zero(n);
  return out;
}

FourierSeries operator-(const FourierSeries& a, const FourierSeries& b) {
  const int N = std::max(a.degree, b.degree);
  FourierSeries out = FourierSeries::zero(N);
  for (int n = -N; n <= N; ++n) out.at(n) = a.at_or_zero(n) - b.at_or_zero(n);
  return out;
}

FourierSeries operator*(cplx c, const FourierSeries& s) {
  FourierSeries out = s;
  for (cplx& v : out.coeffs) v *= c;
  return out;
}

FourierSeries multiply(const FourierSeries& a, const FourierSeries& b) {
  FourierSeries out = FourierSeries::zero(a.degree + b.degree);
  for (int n = -a.degree; n <= a.degree; ++n) {
    if (a.at(n) == cplx(0.0, 0.0)) continue;
    for (int m = -b.degree; m <= b.degree; ++m) out.at(n + m) += a.at(n) * b.at(m);
  }
  return out;
}

FourierSeries conjugate_series(const FourierSeries& s) {
  FourierSeries out = FourierSeries::zero(s.degree);
  for (int n = -s.degree; n <= s.degree; ++n) out.at(n) = std::conj(s.at(-n));
  return out;
}

FourierSeries coefficients(const GridFunction& f, int degree, Exec exec) {
  const int g = f.size();
  if (degree < 0)
    throw validation_error("circle_fourier", "coefficient degree must be nonnegative");
  if (degree > g / 2 - 1)
    throw resolution_error("circle_fourier",
                           "degree " + std::to_string(degree) +
                               " exceeds grid Nyquist band " + std::to_string(g / 2 - 1) +
                               "; raise the grid size");

  FourierSeries out = FourierSeries::zero(degree);
  if (g < kFftThreshold) {
    kernels::dft_analyze(f.values, degree, out.coeffs, exec);
    return out;
  }

  std::vector<cplx> bins(g);
  fft::forward(f.values, bins);
  for (int n = -degree; n <= degree; ++n)
    out.at(n) = bins[static_cast<size_t>((n + g) % g)] / static_cast<double>(g);
  return out;
}

GridFunction evaluate(const FourierSeries& s, const CircleGrid& grid, Exec exec) {
  const int g = grid.size();
  GridFunction out = GridFunction::zeros(grid);
  if (g < kFftThreshold && s.degree <= g / 2 - 1) {
    kernels::dft_synthesize(s.coeffs, s.degree, g, out.values, exec);
    return out;
  }

  // Bin folding reproduces the plain synthesis sum exactly, including the
  // aliased case degree >= g/2.
  std::vector<cplx> bins(g, cplx(0.0, 0.0));
  for (int n = -s.degree; n <= s.degree; ++n)
    bins[static_cast<size_t>(((n % g) + g) % g)] += s.at(n);
  fft::inverse_unscaled(bins, out.values);
  return out;
}

FourierSeries fejer_series(const FourierSeries& s, int order) {
  if (order < 1)
    throw validation_error("circle_fourier", "fejer order must be >= 1");
  FourierSeries out = s.resized(std::min(s.degree, order));
  for (int n = -out.degree; n <= out.degree; ++n)
    out.at(n) *= 1.0 - static_cast<double>(std::abs(n)) / (order + 1);
  return out;
}

GridFunction fejer_mean(const GridFunction& f, int order) {
  if (order < 1)
    throw validation_error("circle_fourier", "fejer order must be >= 1");
  const int band = std::min(order, f.size() / 2 - 1);
  return evaluate(fejer_series(coefficients(f, band), order), f.grid);
}

GridFunction dirichlet_mean(const GridFunction& f, int order) {
  if (order < 0)
    throw validation_error("circle_fourier", "dirichlet order must be >= 0");
  const int band = std::min(order, f.size() / 2 - 1);
  return evaluate(coefficients(f, band), f.grid);
}

GridFunction poisson(const FourierSeries& s, double radius, const CircleGrid& grid) {
  if (!(radius > 0.0 && radius < 1.0))
    throw validation_error("circle_fourier",
                           "poisson radius must lie in (0,1), got " +
                               std::to_string(radius));
  FourierSeries scaled = s;
  for (int n = -s.degree; n <= s.degree; ++n)
    scaled.at(n) *= std::pow(radius, std::abs(n));
  return evaluate(scaled, grid);
}

GridFunction poisson_smooth(const GridFunction& f, double radius) {
  if (!(radius > 0.0 && radius < 1.0))
    throw validation_error("circle_fourier",
                           "poisson radius must lie in (0,1), got " +
                               std::to_string(radius));
  const int g = f.size();
  std::vector<cplx> bins(g), back(g);
  fft::forward(f.values, bins);
  for (int k = 0; k < g; ++k) {
    const int n = std::min(k, g - k);  // |frequency| of bin k
    bins[k] *= std::pow(radius, n) / static_cast<double>(g);
  }
  GridFunction out = GridFunction::zeros(f.grid);
  fft::inverse_unscaled(bins, out.values);
  return out;
}

}  // namespace circleop
