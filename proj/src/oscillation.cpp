#include "circleop/oscillation.hpp"

#include <algorithm>
#include <cmath>

namespace circleop {

namespace {

constexpr const char* kModule = "oscillation";

// Grid indices j with theta_j in [start, start + length), wrap-aware.
// Returns {first_index, count}.
std::pair<int, int> arc_indices(const CircleGrid& grid, const Arc& I) {
  const double h = grid.spacing();
  const double eps = 1e-9;
  const int first = static_cast<int>(std::ceil(I.start / h - eps));
  const int past = static_cast<int>(std::ceil((I.start + I.length) / h - eps));
  return {((first % grid.size()) + grid.size()) % grid.size(), past - first};
}

}  // namespace

Arc::Arc(double s, double l) : start(s), length(l) {
  if (!(length > 0.0) || length > two_pi + 1e-12)
    throw validation_error(kModule, "arc length must lie in (0, 2*pi]");
  length = std::min(length, two_pi);
  start = std::fmod(start, two_pi);
  if (start < 0.0) start += two_pi;
}

cplx arc_mean(const GridFunction& f, const Arc& I) {
  auto [first, count] = arc_indices(f.grid, I);
  if (count < 4)
    throw resolution_error(kModule,
                           "arc holds " + std::to_string(std::max(count, 0)) +
                               " grid points; at least 4 required");
  cplx sum(0.0, 0.0);
  for (int i = 0; i < count; ++i) sum += f.values[(first + i) % f.size()];
  return sum / static_cast<double>(count);
}

double mean_oscillation_raw(const GridFunction& f, const Arc& I) {
  auto [first, count] = arc_indices(f.grid, I);
  if (count < 4)
    throw resolution_error(kModule,
                           "arc holds " + std::to_string(std::max(count, 0)) +
                               " grid points; at least 4 required");
  const double rooted = kernels::window_oscillation(f.values, first, count);
  return rooted * rooted;
}

double mean_oscillation(const GridFunction& f, const Arc& I) {
  auto [first, count] = arc_indices(f.grid, I);
  if (count < 4)
    throw resolution_error(kModule,
                           "arc holds " + std::to_string(std::max(count, 0)) +
                               " grid points; at least 4 required");
  return kernels::window_oscillation(f.values, first, count);
}

double OscillationProfile::max_oscillation() const {
  double m = 0.0;
  for (const auto& l : levels) m = std::max(m, l.worst_oscillation);
  return m;
}

double OscillationProfile::last_oscillation() const {
  return levels.empty() ? 0.0 : levels.back().worst_oscillation;
}

int default_profile_depth(const CircleGrid& grid, int min_points) {
  int depth = 0;
  while (grid.size() >> (depth + 1) >= min_points) ++depth;
  return depth;
}

OscillationProfile bmo_profile(const GridFunction& f, int depth, Exec exec) {
  const int g = f.size();
  if (depth < 0)
    throw validation_error(kModule, "profile depth must be nonnegative");
  if ((g >> depth) < 4)
    throw resolution_error(kModule,
                           "depth " + std::to_string(depth) +
                               " leaves fewer than 4 grid points per arc");

  OscillationProfile profile;
  profile.levels.reserve(depth + 1);
  for (int k = 0; k <= depth; ++k) {
    const int len = g >> k;
    const int stride = len / 2;            // 50% overlap
    const int n_windows = 2 * (1 << k);    // covers the circle twice
    const double worst =
        kernels::worst_window_oscillation(f.values, len, n_windows, stride, exec);
    profile.levels.push_back({two_pi / (1 << k), worst});
  }
  return profile;
}

bool vmo_consistent(const OscillationProfile& p, double decay_factor) {
  const double m = p.max_oscillation();
  if (m < 1e-9) return true;  // flat to rounding
  const size_t n = p.levels.size();
  if (n < 3) return false;
  const double a = p.levels[n - 3].worst_oscillation;
  const double b = p.levels[n - 2].worst_oscillation;
  const double c = p.levels[n - 1].worst_oscillation;
  const double slack = 1e-12 * m;
  return c < decay_factor * m && b <= a + slack && c <= b + slack;
}

EssentialRangeEstimate essential_range(const GridFunction& f, int bins) {
  if (bins < 8) throw validation_error(kModule, "essential_range needs >= 8 bins");
  if (!f.is_real())
    throw validation_error(kModule, "essential_range expects a real-valued function");

  EssentialRangeEstimate est;
  est.lo = f.values[0].real();
  est.hi = est.lo;
  for (const cplx& v : f.values) {
    est.lo = std::min(est.lo, v.real());
    est.hi = std::max(est.hi, v.real());
  }
  const double span = est.hi - est.lo;
  est.bin_width = span > 0.0 ? span / bins : 1.0 / bins;
  est.occupancy.assign(bins, 0.0);

  const double measure_per_sample = two_pi / f.size();
  for (const cplx& v : f.values) {
    int b = span > 0.0
                ? std::min(bins - 1, static_cast<int>((v.real() - est.lo) / est.bin_width))
                : 0;
    est.occupancy[b] += measure_per_sample;
  }

  // Maximal empty interior runs wider than 2 bin widths.
  int run_start = -1;
  for (int b = 0; b <= bins; ++b) {
    const bool empty = b < bins && est.occupancy[b] == 0.0;
    if (empty && run_start < 0) run_start = b;
    if (!empty && run_start >= 0) {
      const int run_len = b - run_start;
      const bool interior = run_start > 0 && b < bins;
      if (interior && run_len > 2)
        est.gaps.emplace_back(est.lo + run_start * est.bin_width,
                              est.lo + b * est.bin_width);
      run_start = -1;
    }
  }
  return est;
}

IntegerVmoResult integer_valued_vmo_check(const GridFunction& f) {
  if (!f.is_real()) return {IntegerVmoVerdict::NotIntegerValued, 0.0};

  bool integer_valued = true;
  long long lo = 0, hi = 0;
  bool first = true;
  for (const cplx& v : f.values) {
    const double r = v.real();
    const double nearest = std::round(r);
    if (std::abs(r - nearest) > 0.25) {
      integer_valued = false;
      break;
    }
    const long long level = static_cast<long long>(nearest);
    if (first) {
      lo = hi = level;
      first = false;
    } else {
      lo = std::min(lo, level);
      hi = std::max(hi, level);
    }
  }
  if (!integer_valued) return {IntegerVmoVerdict::NotIntegerValued, 0.0};
  if (lo == hi) return {IntegerVmoVerdict::Constant, 0.0};

  // Two or more integer levels: the profile of the rounded function is a
  // certified-at-resolution floor at every scale.
  GridFunction rounded = f;
  for (cplx& v : rounded.values) v = cplx(std::round(v.real()), 0.0);
  const OscillationProfile p = bmo_profile(rounded, default_profile_depth(f.grid));
  double floor_val = p.levels.front().worst_oscillation;
  for (const auto& l : p.levels) floor_val = std::min(floor_val, l.worst_oscillation);
  return {IntegerVmoVerdict::OscillationLowerBound, floor_val};
}

}  // namespace circleop
