#include "circleop/transforms.hpp"

#include <algorithm>
#include <cmath>

namespace circleop {

FourierSeries hilbert(const FourierSeries& s) {
  FourierSeries out = FourierSeries::zero(s.degree);
  for (int n = 1; n <= s.degree; ++n) {
    // -i * a(n) and +i * a(-n), done by component swap so the map is exact.
    const cplx p = s.at(n);
    const cplx m = s.at(-n);
    out.at(n) = cplx(p.imag(), -p.real());
    out.at(-n) = cplx(-m.imag(), m.real());
  }
  return out;
}

FourierSeries conjugation(const FourierSeries& s) {
  FourierSeries h = hilbert(s);
  for (cplx& c : h.coeffs) c = -c;
  return h;
}

TransformReport double_hilbert_check(const FourierSeries& s) {
  TransformReport rep;
  rep.input = s;
  rep.output = hilbert(hilbert(s));

  // Residual against -s + a(0).
  FourierSeries expected = cplx(-1.0, 0.0) * s;
  expected.at(0) += s.at(0);
  const FourierSeries diff = rep.output - expected;
  rep.identity_residuals["double_hilbert_l2"] = std::sqrt(diff.l2_norm_sq());
  rep.identity_residuals["double_hilbert_sup"] = diff.max_coeff_abs();

  const double in_energy = s.l2_norm_sq();
  const double out_energy = hilbert(s).l2_norm_sq();
  rep.identity_residuals["l2_contraction_slack"] = in_energy - out_energy;
  return rep;
}

OuterFunction outer_function(const FourierSeries& w, const OuterOptions& opt) {
  if (!w.real_symmetric(1e-9))
    throw validation_error("transforms",
                           "outer_function expects a real-valued series (conjugate-symmetric coefficients)");

  const int bw = std::max(1, w.degree);
  const CircleGrid grid(next_power_of_two(
      std::max<long long>(64, 2LL * opt.grid_factor * bw)));

  GridFunction ws = evaluate(w, grid);
  ws.force_real(1e-9, "transforms");
  GridFunction wt = evaluate(hilbert(w), grid);
  wt.force_real(1e-9, "transforms");

  GridFunction arg = GridFunction::zeros(grid);
  for (int j = 0; j < grid.size(); ++j)
    arg.values[j] = cplx(ws.values[j].real(), -wt.values[j].real());
  const GridFunction outer = pointwise_exp(arg);

  const int out_degree = opt.degree > 0 ? std::min(opt.degree, grid.size() / 2 - 1)
                                        : grid.size() / 2 - 1;
  OuterFunction result;
  result.series = coefficients(outer, out_degree);

  const double total_energy = mean_square(outer);
  const double captured = result.series.l2_norm_sq();
  result.tail_energy_ratio =
      total_energy > 0.0 ? std::max(0.0, total_energy - captured) / total_energy : 0.0;
  if (result.tail_energy_ratio > opt.tail_tol)
    throw resolution_error("transforms",
                           "exp(w - i*hilbert(w)) is not resolved at this bandwidth "
                           "(tail energy ratio " + std::to_string(result.tail_energy_ratio) +
                           "); raise grid_factor or the output degree");

  double pos = 0.0, nonpos = 0.0, peak = 0.0;
  for (int n = -result.series.degree; n <= result.series.degree; ++n) {
    const double a = std::abs(result.series.at(n));
    peak = std::max(peak, a);
    if (n > 0)
      pos = std::max(pos, a);
    else
      nonpos = std::max(nonpos, a);
  }
  result.spectrum_nonpositive = nonpos >= pos;
  result.offside_ratio = peak > 0.0 ? std::min(pos, nonpos) / peak : 0.0;
  return result;
}

}  // namespace circleop
