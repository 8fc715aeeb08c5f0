#pragma once

#include <map>
#include <string>

#include "circleop/fourier.hpp"

namespace circleop {

/// Hilbert transform as the coefficient multiplier a(n) -> -i sgn(n) a(n).
/// Exact in coefficient arithmetic (component swap, no rounding).
FourierSeries hilbert(const FourierSeries& s);

/// Conjugation operator; identical to -hilbert(s) by construction.
FourierSeries conjugation(const FourierSeries& s);

struct TransformReport {
  FourierSeries input;
  FourierSeries output;
  std::map<std::string, double> identity_residuals;
};

/// Applies hilbert twice and reports the residual against -s + a(0),
/// together with the L^2 contraction slack.
TransformReport double_hilbert_check(const FourierSeries& s);

struct OuterOptions {
  int grid_factor = 8;    // sampling grid >= grid_factor * bandwidth of w
  int degree = -1;        // output truncation; -1 = grid/2 - 1
  double onesided_tol = 1e-9;  // off-side coefficient mass, relative to the peak
  double tail_tol = 1e-9;      // unexpanded energy fraction triggering resolution error
};

struct OuterFunction {
  FourierSeries series;
  double offside_ratio;     // max |a| on the vanishing half-line / max |a|
  double tail_energy_ratio; // energy outside the returned band / total energy
  bool spectrum_nonpositive; // true: mass on n <= 0 (the case for these conventions)
};

/// Series of exp(w - i*hilbert(w)) for real-valued w, computed by sampling on
/// an oversized grid and re-expanding. Under the sign conventions used here
/// (hilbert(cos) = +sin) the spectrum lands on the nonpositive half-line; the
/// one-sided check confirms the positive-index coefficients vanish to
/// onesided_tol relative to the largest coefficient.
OuterFunction outer_function(const FourierSeries& w, const OuterOptions& opt = {});

}  // namespace circleop
