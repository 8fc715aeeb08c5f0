#include "circleop/grid.hpp"

#include <algorithm>
#include <cmath>

namespace circleop {

int next_power_of_two(long long n) {
  if (n <= 8) return 8;
  long long p = 8;
  while (p < n) p <<= 1;
  if (p > (1LL << 26))
    throw resolution_error("circle_fourier",
                           "required grid size " + std::to_string(n) +
                               " exceeds the supported maximum 2^26");
  return static_cast<int>(p);
}

GridFunction& GridFunction::force_real(double tol, const char* module_name) {
  double scale = 0.0, worst = 0.0;
  for (const cplx& v : values) {
    scale = std::max(scale, std::abs(v.real()));
    worst = std::max(worst, std::abs(v.imag()));
  }
  if (worst > tol * std::max(1.0, scale))
    throw contract_error(module_name,
                         "expected a real-valued sample; imaginary mass " +
                             std::to_string(worst) + " exceeds tolerance");
  for (cplx& v : values) v = cplx(v.real(), 0.0);
  return *this;
}

double sup_abs(const GridFunction& f) {
  double m = 0.0;
  for (const cplx& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

double sup_abs_diff(const GridFunction& f, const GridFunction& g) {
  if (!(f.grid == g.grid))
    throw validation_error("circle_fourier", "grid mismatch in sup_abs_diff");
  double m = 0.0;
  for (size_t j = 0; j < f.values.size(); ++j)
    m = std::max(m, std::abs(f.values[j] - g.values[j]));
  return m;
}

double min_abs(const GridFunction& f) {
  double m = std::abs(f.values[0]);
  for (const cplx& v : f.values) m = std::min(m, std::abs(v));
  return m;
}

double mean_square(const GridFunction& f) {
  double s = 0.0;
  for (const cplx& v : f.values) s += std::norm(v);
  return s / f.size();
}

GridFunction pointwise_multiply(const GridFunction& f, const GridFunction& g) {
  if (!(f.grid == g.grid))
    throw validation_error("circle_fourier", "grid mismatch in pointwise_multiply");
  GridFunction out = f;
  for (size_t j = 0; j < out.values.size(); ++j) out.values[j] *= g.values[j];
  return out;
}

GridFunction pointwise_conjugate(const GridFunction& f) {
  GridFunction out = f;
  for (cplx& v : out.values) v = std::conj(v);
  return out;
}

GridFunction pointwise_exp(const GridFunction& f) {
  GridFunction out = f;
  for (cplx& v : out.values) v = std::exp(v);
  return out;
}

GridFunction pointwise_exp_i(const GridFunction& f) {
  if (!f.is_real())
    throw validation_error("circle_fourier", "pointwise_exp_i expects a real-valued sample");
  GridFunction out = f;
  for (cplx& v : out.values) v = std::polar(1.0, v.real());
  return out;
}

GridFunction pointwise_log_abs(const GridFunction& f) {
  GridFunction out = f;
  for (cplx& v : out.values) {
    double a = std::abs(v);
    if (a <= 0.0)
      throw ill_conditioned_error("symbol_algebra", "log|f| undefined: sample hits zero");
    v = cplx(std::log(a), 0.0);
  }
  return out;
}

}  // namespace circleop
