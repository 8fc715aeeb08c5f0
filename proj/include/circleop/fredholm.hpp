#pragma once

#include <utility>
#include <vector>

#include "circleop/fourier.hpp"

namespace circleop {

struct WindingOptions {
  /// Primary smoothing radius; <= 0 selects 1 - 2*pi/grid_size.
  double radius = 0.0;
  /// Radii the winding must agree on; empty selects {0.9, 0.99, primary}.
  std::vector<double> stability;
  /// Smoothed curve must stay at least this far from 0.
  double curve_delta = 1e-6;
  /// Raw samples must stay at least this far from 0 (invertibility precondition).
  double invertibility_delta = 1e-6;
  /// Argument increments at or above this fraction of pi are rejected.
  double increment_guard = 0.95;
};

struct WindingResult {
  int winding = 0;
  double min_curve_modulus = 0.0;  // at the primary radius
  double radius_used = 0.0;
  std::vector<std::pair<double, int>> stability;  // radius -> winding
};

/// Winding number about 0 of the Poisson-smoothed symbol curve: argument
/// increments summed around the grid and divided by 2*pi. The result must be
/// an exact integer and must agree across the stability radii.
WindingResult winding_number(const GridFunction& f, const WindingOptions& opt = {});
WindingResult winding_number(const GridFunction& f, double radius);

struct AdditivityReport {
  int ind_f = 0;
  int ind_g = 0;
  int ind_fg = 0;
  bool additive = false;
};

AdditivityReport index_additivity_check(const GridFunction& f, const GridFunction& g,
                                        const WindingOptions& opt = {});

/// Fredholm index of the Toeplitz operator with this symbol: minus the
/// winding number. Unchanged by compact perturbations.
int operator_index(const GridFunction& f, const WindingOptions& opt = {});

}  // namespace circleop
