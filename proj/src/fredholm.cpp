#include "circleop/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace circleop {

namespace {

constexpr const char* kModule = "fredholm_index";

double default_radius(const CircleGrid& grid) { return 1.0 - two_pi / grid.size(); }

// Winding of the Poisson-smoothed curve at one radius.
struct CurveWinding {
  int winding;
  double min_modulus;
};

CurveWinding winding_at(const GridFunction& f, double radius, const WindingOptions& opt) {
  const GridFunction curve = poisson_smooth(f, radius);
  const double floor_mod = min_abs(curve);
  if (floor_mod < opt.curve_delta)
    throw ill_conditioned_error(
        kModule, "smoothed symbol curve passes within " + std::to_string(floor_mod) +
                     " of 0 at radius " + std::to_string(radius) +
                     "; winding is ill-conditioned");

  const int g = curve.size();
  const double guard = opt.increment_guard * std::numbers::pi;
  double total = 0.0;
  for (int j = 0; j < g; ++j) {
    const double inc = std::arg(curve.values[(j + 1) % g] / curve.values[j]);
    if (std::abs(inc) >= guard)
      throw resolution_error(kModule,
                             "argument increment " + std::to_string(inc) +
                                 " at sample " + std::to_string(j) +
                                 " is too large; raise the grid size");
    total += inc;
  }
  const double turns = total / two_pi;
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 1e-6)
    throw contract_error(kModule, "winding " + std::to_string(turns) +
                                      " is not an integer at radius " +
                                      std::to_string(radius));
  return {static_cast<int>(rounded), floor_mod};
}

}  // namespace

WindingResult winding_number(const GridFunction& f, const WindingOptions& opt) {
  const double r_primary = opt.radius > 0.0 ? opt.radius : default_radius(f.grid);
  if (!(r_primary > 0.0 && r_primary < 1.0))
    throw validation_error(kModule, "winding radius must lie in (0,1)");
  if (min_abs(f) < opt.invertibility_delta)
    throw validation_error(kModule,
                           "symbol is not invertible at resolution (min |f| = " +
                               std::to_string(min_abs(f)) + ")");

  std::vector<double> radii = opt.stability;
  if (radii.empty()) radii = {0.9, 0.99, r_primary};
  if (std::find(radii.begin(), radii.end(), r_primary) == radii.end())
    radii.push_back(r_primary);
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  for (double r : radii)
    if (!(r > 0.0 && r < 1.0))
      throw validation_error(kModule, "stability radius must lie in (0,1)");

  WindingResult result;
  result.radius_used = r_primary;

  const int n_radii = static_cast<int>(radii.size());
  std::vector<CurveWinding> per_radius(n_radii);
  std::vector<std::exception_ptr> failures(n_radii);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n_radii; ++i) {
    try {
      per_radius[i] = winding_at(f, radii[i], opt);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  }
  for (int i = 0; i < n_radii; ++i)
    if (failures[i]) std::rethrow_exception(failures[i]);

  for (int i = 0; i < n_radii; ++i) {
    result.stability.emplace_back(radii[i], per_radius[i].winding);
    if (radii[i] == r_primary) {
      result.winding = per_radius[i].winding;
      result.min_curve_modulus = per_radius[i].min_modulus;
    }
  }
  for (const auto& [r, wnd] : result.stability)
    if (wnd != result.winding)
      throw contract_error(kModule,
                           "winding disagrees across stability radii: " +
                               std::to_string(wnd) + " at r=" + std::to_string(r) +
                               " vs " + std::to_string(result.winding) + " at r=" +
                               std::to_string(r_primary));
  return result;
}

WindingResult winding_number(const GridFunction& f, double radius) {
  if (!(radius > 0.0 && radius < 1.0))
    throw validation_error(kModule, "winding radius must lie in (0,1), got " +
                                        std::to_string(radius));
  WindingOptions opt;
  opt.radius = radius;
  return winding_number(f, opt);
}

AdditivityReport index_additivity_check(const GridFunction& f, const GridFunction& g,
                                        const WindingOptions& opt) {
  AdditivityReport rep;
  rep.ind_f = winding_number(f, opt).winding;
  rep.ind_g = winding_number(g, opt).winding;
  rep.ind_fg = winding_number(pointwise_multiply(f, g), opt).winding;
  rep.additive = rep.ind_fg == rep.ind_f + rep.ind_g;
  return rep;
}

int operator_index(const GridFunction& f, const WindingOptions& opt) {
  return -winding_number(f, opt).winding;
}

}  // namespace circleop
