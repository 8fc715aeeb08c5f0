#pragma once

#include <vector>

#include "circleop/grid.hpp"
#include "circleop/kernels.hpp"

namespace circleop {

/// Two-sided coefficient table a(n), -degree <= n <= degree, stored at index
/// n + degree. A series representing a real-valued function satisfies
/// a(-n) == conj(a(n)).
struct FourierSeries {
  int degree = 0;
  std::vector<cplx> coeffs;  // length 2*degree + 1

  FourierSeries() : coeffs(1, cplx(0.0, 0.0)) {}
  FourierSeries(int N, std::vector<cplx> c) : degree(N), coeffs(std::move(c)) {
    if (N < 0 || static_cast<int>(coeffs.size()) != 2 * N + 1)
      throw validation_error("circle_fourier", "coefficient table must have 2N+1 entries");
  }

  static FourierSeries zero(int N) {
    return FourierSeries(N, std::vector<cplx>(2 * N + 1, cplx(0.0, 0.0)));
  }

  /// The single-mode series c * chi_n.
  static FourierSeries delta(int n, cplx c = cplx(1.0, 0.0)) {
    FourierSeries s = zero(std::abs(n));
    s.at(n) = c;
    return s;
  }

  cplx at(int n) const { return coeffs[static_cast<size_t>(n + degree)]; }
  cplx& at(int n) { return coeffs[static_cast<size_t>(n + degree)]; }
  bool has(int n) const { return n >= -degree && n <= degree; }

  /// a(n) with zero extension outside [-degree, degree].
  cplx at_or_zero(int n) const { return has(n) ? at(n) : cplx(0.0, 0.0); }

  bool real_symmetric(double tol) const;

  double l2_norm_sq() const;
  double max_coeff_abs() const;

  /// Copy restricted (or zero-extended) to degree M.
  FourierSeries resized(int M) const;
};

FourierSeries operator+(const FourierSeries& a, const FourierSeries& b);
FourierSeries operator-(const FourierSeries& a, const FourierSeries& b);
FourierSeries operator*(cplx c, const FourierSeries& s);

/// Coefficient convolution; the exact series of the pointwise product.
FourierSeries multiply(const FourierSeries& a, const FourierSeries& b);

/// Series of conj(f): a'(n) = conj(a(-n)).
FourierSeries conjugate_series(const FourierSeries& s);

/// Uniform-grid quadrature of the coefficient integral, exact for trig
/// polynomials inside the aliasing-free band. Requires
/// degree <= grid.size/2 - 1. Large grids go through the FFT; both paths
/// evaluate the same quadrature sum.
FourierSeries coefficients(const GridFunction& f, int degree,
                           Exec exec = Exec::Parallel);

/// Samples of sum_n a(n) e^{i n theta_j}.
GridFunction evaluate(const FourierSeries& s, const CircleGrid& grid,
                      Exec exec = Exec::Parallel);

/// N-th Fejer (Cesaro) mean: coefficients reweighted by 1 - |n|/(N+1).
GridFunction fejer_mean(const GridFunction& f, int order);

/// N-th Dirichlet partial sum; reproduces band-limited samples exactly once
/// the order reaches the bandwidth.
GridFunction dirichlet_mean(const GridFunction& f, int order);

/// Fejer reweighting at the coefficient level.
FourierSeries fejer_series(const FourierSeries& s, int order);

/// Abel-summed Poisson transform: samples of sum_n a(n) r^{|n|} e^{i n theta}.
/// Requires 0 < r < 1.
GridFunction poisson(const FourierSeries& s, double radius, const CircleGrid& grid);

/// Poisson smoothing of grid samples at radius r over the full spectral band
/// of the grid (FFT bin scaling by r^{|n|}).
GridFunction poisson_smooth(const GridFunction& f, double radius);

}  // namespace circleop
