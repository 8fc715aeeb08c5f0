#include "circleop/reference.hpp"

#include <cmath>
#include <numbers>

namespace circleop::reference {

FourierSeries coefficients_direct(const GridFunction& f, int degree) {
  const int g = f.size();
  FourierSeries out = FourierSeries::zero(degree);
  for (int n = -degree; n <= degree; ++n) {
    cplx acc(0.0, 0.0);
    for (int j = 0; j < g; ++j)
      acc += f.values[j] * std::polar(1.0, -n * f.grid.theta(j));
    out.at(n) = acc / static_cast<double>(g);
  }
  return out;
}

GridFunction evaluate_direct(const FourierSeries& s, const CircleGrid& grid) {
  GridFunction out = GridFunction::zeros(grid);
  for (int j = 0; j < grid.size(); ++j) {
    cplx acc(0.0, 0.0);
    for (int n = -s.degree; n <= s.degree; ++n)
      acc += s.at(n) * std::polar(1.0, n * grid.theta(j));
    out.values[j] = acc;
  }
  return out;
}

namespace {

// (e^{it} + z)/(e^{it} - z) at z = r e^{i theta}.
cplx mobius_kernel(double r, double theta, double t) {
  const cplx eit = std::polar(1.0, t);
  const cplx z = std::polar(r, theta);
  return (eit + z) / (eit - z);
}

}  // namespace

GridFunction poisson_kernel_quadrature(const GridFunction& w, double radius) {
  const int g = w.size();
  GridFunction out = GridFunction::zeros(w.grid);
  for (int j = 0; j < g; ++j) {
    cplx acc(0.0, 0.0);
    for (int m = 0; m < g; ++m)
      acc += w.values[m] * mobius_kernel(radius, w.grid.theta(j), w.grid.theta(m)).real();
    out.values[j] = acc / static_cast<double>(g);
  }
  return out;
}

GridFunction conjugation_kernel_quadrature(const GridFunction& w, double radius) {
  const int g = w.size();
  GridFunction out = GridFunction::zeros(w.grid);
  for (int j = 0; j < g; ++j) {
    cplx acc(0.0, 0.0);
    for (int m = 0; m < g; ++m)
      acc -= w.values[m] * mobius_kernel(radius, w.grid.theta(j), w.grid.theta(m)).imag();
    out.values[j] = acc / static_cast<double>(g);
  }
  return out;
}

GridFunction fejer_kernel_quadrature(const GridFunction& f, int order) {
  const int g = f.size();
  const int n1 = order + 1;
  std::vector<double> kernel(g);
  for (int m = 0; m < g; ++m) {
    const double t = f.grid.theta(m);
    const double s = std::sin(t / 2.0);
    kernel[m] = s == 0.0 ? static_cast<double>(n1) * n1
                         : std::pow(std::sin(n1 * t / 2.0) / s, 2);
  }
  GridFunction out = GridFunction::zeros(f.grid);
  for (int j = 0; j < g; ++j) {
    cplx acc(0.0, 0.0);
    for (int m = 0; m < g; ++m)
      acc += f.values[((j - m) % g + g) % g] * kernel[m];
    out.values[j] = acc / (static_cast<double>(g) * n1);
  }
  return out;
}

double winding_raw(const GridFunction& f) {
  const int g = f.size();
  double total = 0.0;
  for (int j = 0; j < g; ++j)
    total += std::arg(f.values[(j + 1) % g] / f.values[j]);
  return total / (2.0 * std::numbers::pi);
}

double mean_oscillation_double_integral(const GridFunction& f, const Arc& I) {
  const double h = f.grid.spacing();
  const double eps = 1e-9;
  const int first = static_cast<int>(std::ceil(I.start / h - eps));
  const int count =
      static_cast<int>(std::ceil((I.start + I.length) / h - eps)) - first;
  const int g = f.size();

  double acc = 0.0;
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b)
      acc += std::norm(f.values[((first + a) % g + g) % g] -
                       f.values[((first + b) % g + g) % g]);
  return acc / (2.0 * count * count);
}

}  // namespace circleop::reference
