#pragma once

#include <complex>
#include <numbers>
#include <vector>

#include "circleop/errors.hpp"

namespace circleop {

using cplx = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

constexpr bool is_power_of_two(long long n) { return n > 0 && (n & (n - 1)) == 0; }

int next_power_of_two(long long n);

/// Uniform grid theta_j = 2*pi*j/size, j = 0..size-1. Sizes are powers of
/// two (>= 8) so fast transforms and dyadic arc families line up exactly.
class CircleGrid {
public:
  explicit CircleGrid(int size) : size_(size) {
    if (size < 8 || !is_power_of_two(size))
      throw validation_error("circle_fourier",
                             "grid size must be a power of two >= 8, got " +
                                 std::to_string(size));
  }

  int size() const { return size_; }
  double spacing() const { return two_pi / size_; }
  double theta(int j) const { return two_pi * j / size_; }

  std::vector<double> points() const {
    std::vector<double> p(size_);
    for (int j = 0; j < size_; ++j) p[j] = theta(j);
    return p;
  }

  friend bool operator==(const CircleGrid& a, const CircleGrid& b) {
    return a.size_ == b.size_;
  }

private:
  int size_;
};

/// Complex samples over a CircleGrid. A function is "real-valued" when every
/// imaginary part is exactly zero; force_real() establishes that state after
/// transforms that are real-preserving only up to rounding.
struct GridFunction {
  CircleGrid grid;
  std::vector<cplx> values;

  GridFunction(CircleGrid g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != grid.size())
      throw validation_error("circle_fourier", "sample count does not match grid size");
  }

  static GridFunction zeros(const CircleGrid& g) {
    return GridFunction(g, std::vector<cplx>(g.size(), cplx(0.0, 0.0)));
  }

  static GridFunction real(const CircleGrid& g, const std::vector<double>& v) {
    std::vector<cplx> c(v.size());
    for (size_t j = 0; j < v.size(); ++j) c[j] = cplx(v[j], 0.0);
    return GridFunction(g, std::move(c));
  }

  template <typename F>
  static GridFunction sample(const CircleGrid& g, F&& f) {
    std::vector<cplx> c(g.size());
    for (int j = 0; j < g.size(); ++j) c[j] = cplx(f(g.theta(j)));
    return GridFunction(g, std::move(c));
  }

  int size() const { return grid.size(); }

  bool is_real() const {
    for (const cplx& v : values)
      if (v.imag() != 0.0) return false;
    return true;
  }

  /// Zeroes imaginary parts provided they are below tol relative to the
  /// sample scale; throws otherwise.
  GridFunction& force_real(double tol, const char* module_name);

  std::vector<double> real_parts() const {
    std::vector<double> r(values.size());
    for (size_t j = 0; j < values.size(); ++j) r[j] = values[j].real();
    return r;
  }
};

double sup_abs(const GridFunction& f);
double sup_abs_diff(const GridFunction& f, const GridFunction& g);
double min_abs(const GridFunction& f);
/// Grid mean of |f|^2 (the L^2(T) norm squared under the uniform quadrature).
double mean_square(const GridFunction& f);

GridFunction pointwise_multiply(const GridFunction& f, const GridFunction& g);
GridFunction pointwise_conjugate(const GridFunction& f);
/// exp(f) sample by sample.
GridFunction pointwise_exp(const GridFunction& f);
/// exp(i*f) sample by sample; f must be real-valued.
GridFunction pointwise_exp_i(const GridFunction& f);
/// log|f| sample by sample; every |f_j| must be positive.
GridFunction pointwise_log_abs(const GridFunction& f);

}  // namespace circleop
